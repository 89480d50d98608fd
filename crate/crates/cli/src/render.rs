//! Text, JSON, CSV and Markdown renderers. All output is byte-deterministic
//! for a fixed input: orderings come from the underlying sorted containers.

use nodal_hodge::bipoly::BiPoly;
use nodal_hodge::degeneration::MixedTable;
use nodal_hodge::rational;

pub fn hpoly_text(space: &str, genus: u32, poly: &BiPoly) -> String {
    format!(
        "space: {space}\ngenus: {genus}\npolynomial: {poly}\ndiagonal: {}\n",
        poly.diagonal()
    )
}

pub fn hpoly_json(space: &str, genus: u32, poly: &BiPoly) -> String {
    let terms: Vec<serde_json::Value> = poly
        .terms()
        .map(|(e, c)| {
            // Closed-form coefficients are dimensions; render as numbers,
            // falling back to a string for anything non-integral.
            let dim = if c.is_integer() {
                u64::try_from(c.numer().clone())
                    .map(serde_json::Value::from)
                    .unwrap_or_else(|_| serde_json::Value::String(rational::render(c)))
            } else {
                serde_json::Value::String(rational::render(c))
            };
            serde_json::json!({ "p": e.p, "q": e.q, "dim": dim })
        })
        .collect();
    let doc = serde_json::json!({
        "space": space,
        "genus": genus,
        "polynomial": poly.to_string(),
        "diagonal": poly.diagonal().to_string(),
        "terms": terms,
    });
    serde_json::to_string_pretty(&doc).expect("static schema serializes")
}

pub fn hpoly_csv(poly: &BiPoly) -> String {
    let mut out = String::from("p,q,dim\n");
    for (e, c) in poly.terms() {
        out.push_str(&format!("{},{},{}\n", e.p, e.q, rational::render(c)));
    }
    out
}

/// Hodge grid: rows are `p`, columns are `q`.
pub fn hpoly_markdown(space: &str, genus: u32, poly: &BiPoly) -> String {
    let max_p = poly.terms().map(|(e, _)| e.p).max().unwrap_or(0);
    let max_q = poly.terms().map(|(e, _)| e.q).max().unwrap_or(0);
    let mut out = format!("### {space}, genus {genus}\n\n");
    out.push_str("| p\\q |");
    for q in 0..=max_q {
        out.push_str(&format!(" {q} |"));
    }
    out.push('\n');
    out.push_str("| --- |");
    for _ in 0..=max_q {
        out.push_str(" --- |");
    }
    out.push('\n');
    for p in 0..=max_p {
        out.push_str(&format!("| {p} |"));
        for q in 0..=max_q {
            out.push_str(&format!(" {} |", rational::render(&poly.coeff(p, q))));
        }
        out.push('\n');
    }
    out
}

pub fn table_text(table: &MixedTable) -> String {
    let mut out = format!("space: {}\ngenus: {}\n", table.space(), table.genus());
    out.push_str("  n  w  p  q  dim\n");
    for (n, w, p, q, d) in table.entries() {
        out.push_str(&format!("{n:>3} {w:>2} {p:>2} {q:>2} {d:>4}\n"));
    }
    let betti = table.betti(table.max_n());
    let rendered: Vec<String> = betti.iter().map(u64::to_string).collect();
    out.push_str(&format!("betti: {}\n", rendered.join(" ")));
    out
}

/// Betti/weight grid of the (n, w) marginals, one row per degree.
pub fn table_markdown(table: &MixedTable) -> String {
    let marginal = table.weighted_marginal();
    let max_n = table.max_n();
    let max_w = marginal.iter().map(|(_, w, _)| w).max().unwrap_or(0);
    let mut out = format!("### {}, genus {}\n\n", table.space(), table.genus());
    out.push_str("| n\\w |");
    for w in 0..=max_w {
        out.push_str(&format!(" {w} |"));
    }
    out.push_str(" b_n |\n");
    out.push_str("| --- |");
    for _ in 0..=max_w {
        out.push_str(" --- |");
    }
    out.push_str(" --- |\n");
    let betti = table.betti(max_n);
    for n in 0..=max_n {
        out.push_str(&format!("| {n} |"));
        for w in 0..=max_w {
            out.push_str(&format!(" {} |", marginal.get(n, w)));
        }
        out.push_str(&format!(" {} |\n", betti[n as usize]));
    }
    out
}
