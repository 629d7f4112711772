//! Coefficient grids: the coefficient of `v^a z^b` sits in column `a`, row
//! `b`, with `z` increasing upward.

use crate::laurent::LaurentVZ;

fn axis(values: &[i64]) -> Vec<i64> {
    let (Some(&lo), Some(&hi)) = (values.iter().min(), values.iter().max()) else {
        return Vec::new();
    };
    let step = if values.iter().all(|x| (x - lo).rem_euclid(2) == 0) { 2 } else { 1 };
    (lo..=hi).step_by(step).collect()
}

/// Renders `h` as a grid. Columns step through the v-exponents and rows
/// through the z-exponents, by 2 when all exponents share a parity; zero
/// cells are blank.
pub fn render_table(h: &LaurentVZ) -> String {
    if h.is_zero() {
        return "(zero polynomial)\n".to_string();
    }
    let vs = axis(&h.terms().map(|((v, _), _)| v).collect::<Vec<_>>());
    let zs = axis(&h.terms().map(|((_, z), _)| z).collect::<Vec<_>>());
    let row_labels: Vec<String> = zs.iter().map(|z| format!("z^{z}")).collect();
    let col_labels: Vec<String> = vs.iter().map(|v| format!("v^{v}")).collect();
    let label_w = row_labels.iter().map(String::len).max().unwrap_or(0);
    let cell_w = h
        .terms()
        .map(|(_, c)| c.to_string().len())
        .chain(col_labels.iter().map(String::len))
        .max()
        .unwrap_or(1);

    let mut out = String::new();
    for (z, label) in zs.iter().zip(&row_labels).rev() {
        let mut line = format!("{label:>label_w$} |");
        for &v in &vs {
            let c = h.coeff(v, *z);
            let cell = if c == 0.into() { String::new() } else { c.to_string() };
            line.push_str(&format!(" {cell:>cell_w$}"));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out.push_str(&format!("{:label_w$} +{}\n", "", "-".repeat(vs.len() * (cell_w + 1))));
    let mut footer = format!("{:label_w$}  ", "");
    for label in &col_labels {
        footer.push_str(&format!(" {label:>cell_w$}"));
    }
    out.push_str(footer.trim_end());
    out.push('\n');
    out
}
