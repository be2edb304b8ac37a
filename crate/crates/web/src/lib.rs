//! Browser bindings: three text-in, text-out operations for `www/index.html`.

use polymatch::coherent::{diagonal_field, expected_count, omm};
use polymatch::core::{check_full_gp, GpWitness, GroundConfig};
use polymatch::hyperfields::{builtin, h_chirotope, has_ip, weak_matroid_check, HMatrix};
use polymatch::oriented::{chirotope, SignMatrix};
use wasm_bindgen::prelude::*;

/// Chirotope of a sign matrix under the diagonal field, one row per line.
pub fn diagonal_chirotope_text(rows: &str) -> Result<String, String> {
    let rows: Vec<&str> = rows.split_whitespace().collect();
    let a = SignMatrix::parse(&rows).map_err(|e| e.to_string())?;
    let mf = diagonal_field(a.d(), a.n()).map_err(|e| e.to_string())?;
    let chi = chirotope(&mf, &a).map_err(|e| e.to_string())?;
    let verdict = match check_full_gp(&chi).witness {
        None => "chirotope: yes".to_string(),
        Some(GpWitness::ThreeTerm { quad, rest, terms }) => {
            format!("chirotope: no, three-term witness {quad:?} | {rest:?} with products {terms:?}")
        }
        Some(GpWitness::Full { x, y, terms }) => {
            format!("chirotope: no, witness X={x:?} Y={y:?} with terms {terms:?}")
        }
    };
    Ok(format!("{chi}\n{verdict}"))
}

/// Distinct sign maps of the diagonal (d, n) field against `2^{d(n−d)+1}`.
pub fn omm_count_text(d: usize, n: usize) -> Result<String, String> {
    let config = GroundConfig::new(d, n).map_err(|e| e.to_string())?;
    let set = omm(&diagonal_field(d, n).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    Ok(format!(
        "{} distinct sign maps, law predicts {}",
        set.len(),
        expected_count(config)
    ))
}

/// Weak matroid check over `hyperfield` of the map read off `[[1,1,1,1],[1,a,1,1]]`.
pub fn hyperfield_text(hyperfield: &str, a: &str) -> Result<String, String> {
    let h = builtin(hyperfield).map_err(|e| e.to_string())?;
    let x = h
        .parse_label(a.trim())
        .ok_or_else(|| format!("{a:?} is not an element of {}", h.name()))?;
    let one = h.one();
    let m = HMatrix::new(vec![vec![one; 4], vec![one, x, one, one]]).map_err(|e| e.to_string())?;
    let chi = h_chirotope(&diagonal_field(2, 4).map_err(|e| e.to_string())?, &m, &h).map_err(|e| e.to_string())?;
    let report = weak_matroid_check(&chi, &h).map_err(|e| e.to_string())?;
    let ip = match has_ip(&h) {
        Ok(true) => "has the inflation property",
        Ok(false) => "lacks the inflation property",
        Err(_) => "inflation property not decided",
    };
    Ok(format!(
        "{}\n{} {ip}\nweak matroid: {}",
        chi.display(&h),
        h.name(),
        if report.holds { "yes" } else { "no" }
    ))
}

#[wasm_bindgen]
pub fn diagonal_chirotope(rows: &str) -> Result<String, JsError> {
    diagonal_chirotope_text(rows).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn omm_count(d: usize, n: usize) -> Result<String, JsError> {
    omm_count_text(d, n).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn hyperfield_check(hyperfield: &str, a: &str) -> Result<String, JsError> {
    hyperfield_text(hyperfield, a).map_err(|e| JsError::new(&e))
}
