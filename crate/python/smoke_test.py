#!/usr/bin/env python3
"""Build the antiwork_py extension, import it, and exercise every binding.

Runs the whole surface end to end: text cleaning, labeling, TF-IDF, the
hashing encoder, rank tests, LDA, the file-based pipeline stages, and the
trained sequence model with integrated-gradients attribution. Exits 0 and
prints "smoke test passed" when everything holds.
"""

import hashlib
import json
import math
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent

PIPELINE_CONFIG = """
output_dir = "out"

[sampling]
seed = 0

[split]
ratio = 0.75
seed = 0

[encoder]
backend = "hashing"
dim = 12
max_tokens = 64
seed = 0

[model]
hidden = 4
epochs = 2
lr = 0.05
grad_clip = 5.0
seed = 0

[linear]
l2 = 1e-3
epochs = 50
lr = 0.1
seed = 0

[attribution]
steps = 16

[lda]
topics = 2
alpha = 0.5
beta = 0.01
iters = 20
seed = 0

[synth]
users = 24
variant = "mixed"
seed = 0
"""


def build_and_import():
    subprocess.run(
        ["cargo", "build", "-p", "antiwork-py"],
        cwd=REPO,
        check=True,
    )
    stage_dir = Path(tempfile.mkdtemp(prefix="antiwork_py."))
    shutil.copy2(
        REPO / "target" / "debug" / "libantiwork_py.so",
        stage_dir / "antiwork_py.so",
    )
    sys.path.insert(0, str(stage_dir))
    import antiwork_py

    return antiwork_py


def check_text(aw):
    assert aw.clean_text("Check https://x.com for 3 jobs") == "Check url for @ jobs"
    # digits glued to a URL must not leave URL fragments behind
    nasty = "26406https://ex16.com/a?b=83a"
    cleaned = aw.clean_text(nasty)
    assert cleaned == "@url", cleaned
    assert aw.clean_text(cleaned) == cleaned, "cleaning must be idempotent"
    assert aw.tokenize("Bosses QUIT, right?") == ["bosses", "quit", "right"]
    print("ok: cleaning and tokenization")


def check_labeling(aw):
    assert aw.label_history([("jobs", 1), ("antiwork", 2)]) == "antiwork"
    assert aw.label_history([("jobs", 1), ("work", 2)]) == "neutral"
    # target first, neutral later: no neutral-then-target transition
    assert aw.label_history([("antiwork", 1), ("jobs", 2)]) == "excluded"
    # order of the input list must not matter
    assert aw.label_history([("antiwork", 2), ("jobs", 1)]) == "antiwork"
    # same-timestamp target does not count as "after"
    assert aw.label_history([("jobs", 5), ("antiwork", 5)]) == "excluded"
    assert aw.label_history([("dogs", 1), ("cats", 2)], target="cats", neutral=["dogs"]) == "antiwork"
    try:
        aw.label_history([("a", 1)], target="x", neutral=["x"])
    except ValueError:
        pass
    else:
        raise AssertionError("target inside the neutral set must be rejected")

    w = aw.gaussian_weight(10, 10.0, 2.0)
    assert w == 1.0, w
    assert aw.gaussian_weight(8, 10.0, 2.0) == aw.gaussian_weight(12, 10.0, 2.0)
    print("ok: labeling and sampling weights")


def check_tfidf(aw):
    tf = aw.TfIdf(["the boss quit", "the cat sat", "the boss yelled"])
    assert len(tf) > 0
    terms = tf.terms()
    assert "boss" in terms and "cat" in terms
    vec = tf.transform("boss boss cat")
    assert len(vec) == len(tf)
    assert vec[terms.index("boss")] > 0.0
    # smoothed idf ln((1+n)/(1+df)) + 1: an everywhere-term scores exactly 1
    assert tf.idf("the") == 1.0
    assert tf.idf("boss") > tf.idf("the"), "rarer terms weigh more"
    assert tf.idf("missing") is None
    norm = math.sqrt(sum(x * x for x in vec))
    assert abs(norm - 1.0) < 1e-12, "tf-idf vectors are L2-normalized"
    print("ok: tf-idf")


def check_encoder(aw):
    enc = aw.TextEncoder(dim=16, max_tokens=32, seed=0)
    assert enc.dim == 16
    tokens, vectors, pooled = enc.encode("i quit my job")
    assert tokens == ["i", "quit", "my", "job"]
    assert len(vectors) == 4 and all(len(v) == 16 for v in vectors)
    assert len(pooled) == 16
    again = enc.encode("i quit my job")
    assert (tokens, vectors, pooled) == again, "encoding must be deterministic"
    other_seed = aw.TextEncoder(dim=16, max_tokens=32, seed=1).encode("i quit my job")
    assert other_seed[1] != vectors, "different table seeds give different vectors"
    # mean pooling
    for j in range(16):
        mean = sum(v[j] for v in vectors) / 4
        assert abs(pooled[j] - mean) < 1e-12
    empty_tokens, empty_vectors, empty_pooled = enc.encode("")
    assert empty_tokens == [] and empty_vectors == [] and empty_pooled == [0.0] * 16
    print("ok: hashing encoder")


def check_rank_tests(aw):
    z, p = aw.rank_test([1.0, 2.0, 3.0], [4.0, 5.0, 6.0])
    # fully separated 3-vs-3: exact two-sided p = 2/C(6,3) = 0.1
    assert abs(p - 0.1) < 1e-12, p
    z_rev, p_rev = aw.rank_test([4.0, 5.0, 6.0], [1.0, 2.0, 3.0])
    assert z_rev == -z and p_rev == p, "rank test must be antisymmetric"

    x = [float(i) for i in range(1, 11)]
    y = [v + 2.0 for v in x]
    zs, ps = aw.signed_rank_test(x, y)
    zs_rev, ps_rev = aw.signed_rank_test(y, x)
    assert zs_rev == -zs and ps_rev == ps
    assert 0.0 < ps <= 1.0

    counts = aw.lexicon_counts("I absolutely hate my stupid boss!")
    assert counts, "builtin lexicon has categories"
    for name, (count, rate) in counts.items():
        assert count >= 0 and rate >= 0.0, name
    print("ok: rank tests and lexicon counts")


def check_lda(aw):
    work = ["boss", "quit", "fired", "wage", "shift", "overtime"]
    pets = ["cat", "dog", "purr", "paws", "treat", "whiskers"]
    docs = []
    for start in range(6):
        docs.append([work[(start + j) % 6] for j in range(8)])
        docs.append([pets[(start + j) % 6] for j in range(8)])
    model = aw.fit_lda(docs, k=2, alpha=0.5, beta=0.01, iters=100, seed=0)
    assert model.k == 2
    assert model.dropped_empty == 0
    assert sorted(model.vocab) == sorted(work + pets)
    assert model.retained() == list(range(12))

    rows = model.topic_word()
    assert len(rows) == 2 and all(abs(sum(r) - 1.0) < 1e-9 for r in rows)
    mixtures = model.doc_topic()
    assert len(mixtures) == 12 and all(abs(sum(r) - 1.0) < 1e-9 for r in mixtures)
    props = model.topic_proportions()
    assert abs(sum(props) - 1.0) < 1e-9

    # each topic's top terms should come from one planted cluster
    top0 = [t for t, _ in model.top_terms(0, 3)]
    top1 = [t for t, _ in model.top_terms(1, 3)]
    cluster0 = "work" if top0[0] in work else "pets"
    cluster1 = "work" if top1[0] in work else "pets"
    assert cluster0 != cluster1, (top0, top1)
    source = {"work": work, "pets": pets}
    assert all(t in source[cluster0] for t in top0), top0
    assert all(t in source[cluster1] for t in top1), top1

    # document purity under the best topic->cluster assignment
    assign = [max(range(2), key=lambda t: mixtures[d][t]) for d in range(12)]
    even = sum(1 for d in range(0, 12, 2) if assign[d] == assign[0])
    odd = sum(1 for d in range(1, 12, 2) if assign[d] != assign[0])
    assert even + odd >= 10, assign

    salient = model.salient_terms(5)
    assert len(salient) == 5
    scores = [s for _, s in salient]
    assert scores == sorted(scores, reverse=True)
    assert aw.fit_lda(docs, k=2, alpha=0.5, beta=0.01, iters=100, seed=0).top_terms(
        0, 3
    ) == model.top_terms(0, 3), "same seed must reproduce the fit"

    try:
        model.top_terms(5, 3)
    except IndexError:
        pass
    else:
        raise AssertionError("topic index out of range must raise")
    print("ok: lda topics")


def run_stage(aw, config, stage, **kwargs):
    summary = json.loads(aw.run_stage(str(config), stage, **kwargs))
    assert isinstance(summary, dict), summary
    return summary


def check_pipeline(aw):
    root = Path(tempfile.mkdtemp(prefix="antiwork_pipeline."))
    config = root / "antiwork.toml"
    config.write_text(PIPELINE_CONFIG)
    out = root / "out"

    assert run_stage(aw, config, "synth")["stage"] == "synth"
    corpus = out / "synth_submissions.ndjson"
    digest = hashlib.sha256(corpus.read_bytes()).hexdigest()
    run_stage(aw, config, "synth")
    assert hashlib.sha256(corpus.read_bytes()).hexdigest() == digest, (
        "synth rerun must be byte-identical"
    )

    assert run_stage(aw, config, "ingest")["stage"] == "ingest"
    label = run_stage(aw, config, "label")
    assert label["counts"] == {"antiwork": 12, "neutral": 12, "excluded": 0}, label
    sample = run_stage(aw, config, "sample")
    assert sample["antiwork"] == 12
    split = run_stage(aw, config, "split")
    total = split["train"]["total"] + split["val"]["total"]
    assert total == sample["antiwork"] + sample["drawn"], split
    # ratio 0.75 over 24 users: 18 train / 6 validation
    assert split["train"]["total"] == 18 and split["val"]["total"] == 6, split

    train = run_stage(aw, config, "train")
    assert train["input_dim"] == 12 + 15 and train["hidden_dim"] == 4

    metrics = run_stage(aw, config, "evaluate")
    for name in ("sequence", "tfidf", "random"):
        entry = metrics[name]
        assert set(entry) == {"accuracy", "precision", "recall", "f1"}, entry
        assert all(0.0 <= v <= 1.0 for v in entry.values()), entry

    attribute = run_stage(aw, config, "attribute", limit=2)
    assert attribute["users"] == 2 and attribute["steps"] == 16
    lines = [l for l in (out / "attributions.ndjson").read_text().splitlines() if l]
    assert len(lines) == 2
    row = json.loads(lines[0])
    assert row["author"] and row["steps"] == 16
    assert len(row["tokens"]) == len(row["scores"]) > 0

    assert run_stage(aw, config, "analyze")["stage"] == "analyze"
    assert (out / "analysis.csv").exists()
    assert run_stage(aw, config, "topics")["stage"] == "topics"
    assert (out / "topics.json").exists()
    assert run_stage(aw, config, "report")["stage"] == "report"
    html = (out / "report.html").read_text()
    assert html.startswith("<!DOCTYPE html>") and "</html>" in html

    export = run_stage(aw, config, "export")
    assert export["stage"] == "export"
    exported = (out / "export" / "antiwork_users.ndjson").read_text()
    assert exported.strip(), "export must contain the antiwork users"
    assert '"author"' not in exported, "export must be anonymized"
    assert not (out / "export" / "model.json").exists(), (
        "checkpoint export requires the explicit flag"
    )
    run_stage(aw, config, "export", include_checkpoint=True)
    assert (out / "export" / "model.json").exists()

    try:
        aw.run_stage(str(config), "frobnicate")
    except ValueError:
        pass
    else:
        raise AssertionError("unknown stage must raise ValueError")
    try:
        aw.run_stage(str(config), "attribute", users=["nobody"])
    except RuntimeError:
        pass
    else:
        raise AssertionError("unknown user must raise RuntimeError")
    try:
        aw.run_stage(str(root / "missing.toml"), "synth")
    except ValueError:
        pass
    else:
        raise AssertionError("missing config must raise ValueError")

    print("ok: pipeline stages")
    return out


def check_sequence_model(aw, out):
    clf = aw.SequenceClassifier.load(str(out / "model.json"))
    assert clf.input_dim == 12 + 15 and clf.hidden_dim == 4

    history = ["hired at the plant today", "overtime again no pay", "i quit my job"]
    logit = clf.logit(history)
    assert math.isfinite(logit)
    assert clf.predict(history) == (logit > 0.0)
    assert clf.logit(history) == logit, "inference must be deterministic"

    tokens, scores, delta = clf.attribute(history, 2, steps=32)
    assert tokens == ["i", "quit", "my", "job"]
    assert len(scores) == len(tokens)
    assert all(math.isfinite(s) for s in scores)
    assert math.isfinite(delta) and delta >= 0.0

    try:
        clf.attribute(history, 99)
    except ValueError:
        pass
    else:
        raise AssertionError("target index out of range must raise")
    try:
        clf.logit([])
    except RuntimeError:
        pass
    else:
        raise AssertionError("empty history must raise")
    print("ok: sequence model and attribution")


def main():
    aw = build_and_import()
    assert aw.__version__
    assert 'output_dir' in aw.example_config()
    check_text(aw)
    check_labeling(aw)
    check_tfidf(aw)
    check_encoder(aw)
    check_rank_tests(aw)
    check_lda(aw)
    out = check_pipeline(aw)
    check_sequence_model(aw, out)
    print("smoke test passed")


if __name__ == "__main__":
    main()
