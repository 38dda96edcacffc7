#!/usr/bin/env python3
"""Regenerate crates/core/src/corpus/emoji_table.rs from the stdlib
unicodedata name database.

Names are lowercased and folded to [a-z_] so substitution output stays
stable under re-cleaning (some Unicode names contain digits, e.g. the
Fitzpatrick modifiers)."""

import sys
import unicodedata

# Must match corpus::clean::EMOJI_BLOCKS.
BLOCKS = [
    (0x2600, 0x26FF),    # Miscellaneous Symbols
    (0x2700, 0x27BF),    # Dingbats
    (0x2B00, 0x2BFF),    # Miscellaneous Symbols and Arrows
    (0x1F000, 0x1F02F),  # Mahjong Tiles
    (0x1F0A0, 0x1F0FF),  # Playing Cards
    (0x1F100, 0x1F1FF),  # Enclosed Alphanumeric Supplement (incl. regional indicators)
    (0x1F200, 0x1F2FF),  # Enclosed Ideographic Supplement
    (0x1F300, 0x1F5FF),  # Miscellaneous Symbols and Pictographs
    (0x1F600, 0x1F64F),  # Emoticons
    (0x1F680, 0x1F6FF),  # Transport and Map Symbols
    (0x1F780, 0x1F7FF),  # Geometric Shapes Extended
    (0x1F900, 0x1F9FF),  # Supplemental Symbols and Pictographs
    (0x1FA00, 0x1FA6F),  # Chess Symbols
    (0x1FA70, 0x1FAFF),  # Symbols and Pictographs Extended-A
]


def fold(name: str) -> str:
    out = []
    for ch in name.lower():
        out.append(ch if "a" <= ch <= "z" else "_")
    folded = "".join(out)
    while "__" in folded:
        folded = folded.replace("__", "_")
    return folded.strip("_")


def main() -> None:
    entries = []
    for lo, hi in BLOCKS:
        for cp in range(lo, hi + 1):
            try:
                name = unicodedata.name(chr(cp))
            except ValueError:
                continue
            entries.append((cp, fold(name)))
    entries.sort()

    w = sys.stdout.write
    w("// @generated by tools/gen_emoji_table.py — do not edit by hand.\n")
    w("\n")
    w("/// Codepoint-to-folded-name table for the emoji blocks handled by\n")
    w("/// `clean_text`. Sorted by codepoint for binary search.\n")
    w("pub(crate) static EMOJI_NAMES: &[(u32, &str)] = &[\n")
    for cp, name in entries:
        w(f'    (0x{cp:X}, "{name}"),\n')
    w("];\n")


if __name__ == "__main__":
    main()
