//! Static HTML rendering of word attributions with a fixed color scale.

use crate::attribution::AttributionResult;

/// Highlight bucket for a normalized attribution score. Positive scores map
/// to the yellow→red family, negative to lightblue→blue, and scores within
/// the ±0.05 dead zone get no highlight.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bucket {
    Zero,
    PosLow,
    PosMid,
    PosHigh,
    NegLow,
    NegMid,
    NegHigh,
}

impl Bucket {
    /// Fixed CSS color table.
    pub fn css_color(self) -> &'static str {
        match self {
            Bucket::PosLow => "#FFFFE0",
            Bucket::PosMid => "#FFFF00",
            Bucket::PosHigh => "#FF0000",
            Bucket::NegLow => "#ADD8E6",
            Bucket::NegMid => "#008080",
            Bucket::NegHigh => "#0000FF",
            Bucket::Zero => "transparent",
        }
    }

    /// Magnitude level: zero = 0, low = 1, mid = 2, high = 3.
    pub fn level(self) -> u8 {
        match self {
            Bucket::Zero => 0,
            Bucket::PosLow | Bucket::NegLow => 1,
            Bucket::PosMid | Bucket::NegMid => 2,
            Bucket::PosHigh | Bucket::NegHigh => 3,
        }
    }
}

/// Bucket a normalized score: |s| ≤ 0.05 → zero, (0.05, 1/3] → low,
/// (1/3, 2/3] → mid, (2/3, 1] → high, sign choosing the family. Scores
/// outside [−1, 1] are clamped; the flag reports that.
pub fn bucket(score: f64) -> (Bucket, bool) {
    let clamped = !(-1.0..=1.0).contains(&score);
    let s = score.clamp(-1.0, 1.0);
    let magnitude = s.abs();
    let bucket = if magnitude <= 0.05 {
        Bucket::Zero
    } else if magnitude <= 1.0 / 3.0 {
        if s > 0.0 {
            Bucket::PosLow
        } else {
            Bucket::NegLow
        }
    } else if magnitude <= 2.0 / 3.0 {
        if s > 0.0 {
            Bucket::PosMid
        } else {
            Bucket::NegMid
        }
    } else if s > 0.0 {
        Bucket::PosHigh
    } else {
        Bucket::NegHigh
    };
    (bucket, clamped)
}

/// Escape text for safe embedding in HTML content and attributes.
pub fn escape_html(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&#39;"),
            _ => out.push(c),
        }
    }
    out
}

/// Report header fields. `timestamp` is only rendered when explicitly set,
/// keeping default output byte-identical across runs.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ReportMeta {
    pub title: String,
    pub timestamp: Option<String>,
}

/// Render attributions as one self-contained HTML document: inline CSS, no
/// scripts, all text escaped, a per-post convergence-delta footnote.
pub fn render_report(attributions: &[AttributionResult], meta: &ReportMeta) -> String {
    let title = if meta.title.is_empty() {
        "Word attribution report"
    } else {
        meta.title.as_str()
    };
    let mut clamped_scores = 0usize;
    let mut body = String::new();
    if attributions.is_empty() {
        body.push_str("  <p class=\"empty\">no results</p>\n");
    }
    for result in attributions {
        body.push_str("  <section>\n");
        body.push_str(&format!(
            "    <h2>Post {}</h2>\n    <p class=\"tokens\">",
            escape_html(&result.post_id)
        ));
        for (i, (token, &score)) in result.tokens.iter().zip(&result.scores).enumerate() {
            if i > 0 {
                body.push(' ');
            }
            let (bucket, clamped) = bucket(score);
            if clamped {
                clamped_scores += 1;
            }
            body.push_str(&format!(
                "<span style=\"background-color:{}\">{}</span>",
                bucket.css_color(),
                escape_html(token)
            ));
        }
        body.push_str("</p>\n");
        body.push_str(&format!(
            "    <p class=\"delta\">convergence delta {:.3e} at {} steps</p>\n",
            result.convergence_delta, result.steps
        ));
        body.push_str("  </section>\n");
    }
    if clamped_scores > 0 {
        body.push_str(&format!(
            "  <p class=\"warning\">{clamped_scores} score(s) outside [-1, 1] were clamped</p>\n"
        ));
    }
    let timestamp = meta
        .timestamp
        .as_ref()
        .map(|t| format!("  <p class=\"timestamp\">{}</p>\n", escape_html(t)))
        .unwrap_or_default();
    format!(
        "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n\
         <title>{title}</title>\n<style>\n\
         body {{ font-family: sans-serif; margin: 2em; }}\n\
         .tokens {{ line-height: 1.8; }}\n\
         .tokens span {{ padding: 0 2px; border-radius: 2px; }}\n\
         .delta {{ color: #666; font-size: 0.8em; }}\n\
         .warning {{ color: #a00; }}\n\
         </style>\n</head>\n<body>\n<h1>{title}</h1>\n{timestamp}{body}</body>\n</html>\n",
        title = escape_html(title),
        timestamp = timestamp,
        body = body,
    )
}
