//! JSON fragments and aligned text tables. Everything human-facing is
//! 1-based.

use serde_json::{json, Value};
use symspace::rational::format_q;
use symspace::{CharacterOfT, RootSystem, Weight, WeylElement, Q};

pub fn qs(xs: &[Q]) -> Value {
    Value::from(xs.iter().map(format_q).collect::<Vec<_>>())
}

pub fn weight(w: &Weight) -> Value {
    qs(w.coords())
}

pub fn one_based(xs: impl IntoIterator<Item = usize>) -> Vec<usize> {
    xs.into_iter().map(|x| x + 1).collect()
}

pub fn element(w: &WeylElement) -> Value {
    json!({
        "word": one_based(w.word().iter().copied()),
        "reduced_word": w.word_string(),
        "length": w.length(),
    })
}

pub fn element_with_perm(w: &WeylElement) -> Value {
    let mut v = element(w);
    v["root_permutation"] = json!(one_based(w.root_permutation().iter().map(|&x| x as usize)));
    v
}

pub fn character(c: &CharacterOfT) -> Value {
    serde_json::to_value(c).expect("characters serialize")
}

pub fn character_text(c: &CharacterOfT) -> String {
    c.to_string()
}

pub fn simple_coords_text(c: &[i64]) -> String {
    let parts: Vec<String> = c.iter().map(i64::to_string).collect();
    format!("[{}]", parts.join(","))
}

pub fn root(rs: &RootSystem, idx: usize) -> Value {
    json!({
        "index": idx + 1,
        "name": rs.root_name(idx),
        "coords": weight(&rs.roots()[idx]),
        "simple_coords": rs.root_coords(idx),
    })
}

pub fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

/// Left-aligned columns separated by two spaces.
pub fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut out = line(headers.to_vec());
    out += &line(widths.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>().iter().map(String::as_str).collect());
    for row in rows {
        out += &line(row.iter().map(String::as_str).collect());
    }
    out
}

/// `key: value` lines, keys padded to a common width.
pub fn fields(pairs: &[(&str, String)]) -> String {
    let width = pairs.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    pairs
        .iter()
        .map(|(k, v)| format!("{k}:{} {v}\n", " ".repeat(width - k.chars().count())))
        .collect()
}
