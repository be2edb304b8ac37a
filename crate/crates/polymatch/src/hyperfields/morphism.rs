use num_complex::Complex64;

use crate::core::subset::combinations;
use crate::{Error, Result};

use super::hyperfield::{builtin, HElem, Hyperfield};
use super::matroid::HSignMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Rule {
    ForgetSign,
    SignToPhase,
    TropicalToKrasner,
    Identity,
}

/// A registered hyperfield morphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    name: String,
    source: Hyperfield,
    target: Hyperfield,
    rule: Rule,
}

impl Morphism {
    /// `𝕊 → 𝕂`, forgetting the sign.
    pub fn forget_sign() -> Morphism {
        Morphism {
            name: "forget_sign".into(),
            source: Hyperfield::sign(),
            target: Hyperfield::krasner(),
            rule: Rule::ForgetSign,
        }
    }

    /// `𝕊 → ℙ`, `±1 ↦ ±1`.
    pub fn sign_to_phase() -> Morphism {
        Morphism {
            name: "sign_to_phase".into(),
            source: Hyperfield::sign(),
            target: Hyperfield::phase(),
            rule: Rule::SignToPhase,
        }
    }

    /// `𝕋 → 𝕂`, every finite value to 1.
    pub fn tropical_to_krasner() -> Morphism {
        Morphism {
            name: "tropical_to_krasner".into(),
            source: Hyperfield::tropical(),
            target: Hyperfield::krasner(),
            rule: Rule::TropicalToKrasner,
        }
    }

    /// The set-theoretic identity `ι: ℍ → ℍ̃`.
    pub fn inflation(h: &Hyperfield) -> Morphism {
        Morphism {
            name: format!("inflation({})", h.name()),
            source: h.clone(),
            target: h.inflated(),
            rule: Rule::Identity,
        }
    }

    /// Looks up `forget_sign`, `sign_to_phase`, `tropical_to_krasner` or
    /// `inflation(<hyperfield>)`.
    pub fn by_name(name: &str) -> Result<Morphism> {
        match name.trim() {
            "forget_sign" => Ok(Morphism::forget_sign()),
            "sign_to_phase" => Ok(Morphism::sign_to_phase()),
            "tropical_to_krasner" => Ok(Morphism::tropical_to_krasner()),
            other => {
                let inner = other
                    .strip_prefix("inflation(")
                    .and_then(|s| s.strip_suffix(')'))
                    .ok_or_else(|| Error::UnknownHyperfield(format!("morphism {other}")))?;
                Ok(Morphism::inflation(&builtin(inner)?))
            }
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &Hyperfield {
        &self.source
    }

    pub fn target(&self) -> &Hyperfield {
        &self.target
    }

    pub fn apply(&self, x: &HElem) -> Result<HElem> {
        self.source.check_element(x).map_err(|_| {
            Error::DomainMismatch(format!("{x:?} is not in the domain {} of {}", self.source, self.name))
        })?;
        if x.is_zero() {
            return Ok(HElem::Zero);
        }
        Ok(match self.rule {
            Rule::ForgetSign | Rule::TropicalToKrasner => HElem::Finite(1),
            Rule::SignToPhase => {
                if *x == HElem::Finite(1) {
                    HElem::phase(0, 1)
                } else {
                    HElem::phase(1, 1)
                }
            }
            Rule::Identity => *x,
        })
    }

    /// Exhaustive morphism axioms on a finite source: units, products, and
    /// `φ(x ⊞ y) ⊆ φ(x) ⊞ φ(y)`.
    pub fn verify(&self) -> Result<()> {
        let elems = self
            .source
            .elements()
            .ok_or_else(|| Error::Undecidable(format!("morphism axioms of {}", self.name)))?;
        let fail = |what: String| Err(Error::Axiom(format!("{}: {what}", self.name)));
        if self.apply(&self.source.one())? != self.target.one() {
            return fail("1 is not preserved".into());
        }
        for x in &elems {
            for y in &elems {
                let (fx, fy) = (self.apply(x)?, self.apply(y)?);
                if self.apply(&self.source.mul(x, y))? != self.target.mul(&fx, &fy) {
                    return fail(format!("product of {x:?} and {y:?}"));
                }
                for z in &elems {
                    if self.source.sum_contains(z, &[*x, *y]) && !self.target.sum_contains(&self.apply(z)?, &[fx, fy]) {
                        return fail(format!("sum of {x:?} and {y:?} at {z:?}"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `φ ∘ χ`.
pub fn pushforward(chi: &HSignMap, phi: &Morphism) -> Result<HSignMap> {
    chi.check_domain(phi.source()).map_err(|_| {
        Error::DomainMismatch(format!(
            "map is not valued in {}, the domain of {}",
            phi.source(),
            phi.name()
        ))
    })?;
    Ok(chi.map(|v| phi.apply(v).expect("domain checked")))
}

/// The phase map `z ↦ z/|z|` as an angle in units of π in `[0, 2)`;
/// `None` at zero.
pub fn ph(z: Complex64) -> Option<f64> {
    if z.norm() == 0.0 {
        return None;
    }
    let t = z.arg() / std::f64::consts::PI;
    Some(if t < 0.0 { t + 2.0 } else { t })
}

fn complex_det(mut m: Vec<Vec<Complex64>>) -> Complex64 {
    let k = m.len();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..k {
        let Some(pivot) = (col..k).max_by(|&a, &b| m[a][col].norm().total_cmp(&m[b][col].norm())) else {
            break;
        };
        if m[pivot][col].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col];
        for r in col + 1..k {
            let f = m[r][col] / m[col][col];
            for c in col..k {
                let v = m[col][c];
                m[r][c] -= f * v;
            }
        }
    }
    det
}

/// Phases of the maximal minors of a complex matrix, by sorted column set.
pub fn complex_phase_minors(rows: &[Vec<Complex64>]) -> Vec<(Vec<usize>, Option<f64>)> {
    let d = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    combinations(n, d)
        .map(|sigma| {
            let sub: Vec<Vec<Complex64>> = rows.iter().map(|r| sigma.iter().map(|&c| r[c]).collect()).collect();
            let p = ph(complex_det(sub));
            (sigma, p)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::subset::mask_of;
    use crate::core::{Sign, SignMap};
    use crate::hyperfields::{h_chirotope, sign_element, weak_matroid_check, HMatrix};

    #[test]
    fn registered_morphisms_satisfy_the_axioms() {
        Morphism::forget_sign().verify().unwrap();
        for name in ["sign", "field(5)", "quotient(7,2)", "massouros(3)", "weak_group(2)"] {
            Morphism::inflation(&builtin(name).unwrap()).verify().unwrap();
        }
        assert!(matches!(Morphism::sign_to_phase().verify(), Ok(())));
        assert!(matches!(
            Morphism::tropical_to_krasner().verify(),
            Err(Error::Undecidable(_))
        ));
    }

    #[test]
    fn forgetting_signs_gives_the_matroid_indicator() {
        let chi = SignMap::from_fn(4, 2, |s| {
            if s == [2, 3] {
                Sign::Zero
            } else if s[0] == 0 {
                Sign::Minus
            } else {
                Sign::Plus
            }
        });
        let h = HSignMap::from_sign_map(&chi);
        let k = pushforward(&h, &Morphism::forget_sign()).unwrap();
        for (s, v) in k.entries() {
            let expect = if chi.get(mask_of(&s)).is_zero() {
                HElem::Zero
            } else {
                HElem::Finite(1)
            };
            assert_eq!(v, expect);
        }
    }

    #[test]
    fn domain_mismatch() {
        let chi = HSignMap::from_fn(3, 1, |_| HElem::phase(1, 2));
        assert!(matches!(
            pushforward(&chi, &Morphism::forget_sign()),
            Err(Error::DomainMismatch(_))
        ));
        assert!(Morphism::by_name("frobenius").is_err());
        assert_eq!(
            Morphism::by_name("inflation(phase)").unwrap().target().name(),
            "inflated(phase)"
        );
    }

    #[test]
    fn realized_maps_approach_the_phi_example() {
        let target = [0.5, 0.0, 0.0, 0.0, 0.0, 0.0];
        let mut last = f64::INFINITY;
        for r in [2.0f64, 4.0, 8.0, 12.0] {
            let (e, c) = (r.exp(), |x: f64| Complex64::new(x, 0.0));
            let rows = vec![
                vec![c(e), c(e), c(e), c(e)],
                vec![c(1.0), Complex64::new(0.0, e), c(e * e), c(e * e * e)],
            ];
            let phases = complex_phase_minors(&rows);
            let err = phases
                .iter()
                .zip(target)
                .map(|((_, p), t)| {
                    let d = (p.unwrap() - t).rem_euclid(2.0);
                    d.min(2.0 - d)
                })
                .fold(0.0, f64::max);
            assert!(err < last, "R={r}: {err} not below {last}");
            last = err;
        }
        assert!(last < 1e-4);
    }

    #[test]
    fn sign_to_phase_preserves_chirotopes() {
        let mf = crate::coherent::diagonal_field(2, 4).unwrap();
        let s = builtin("sign").unwrap();
        let a = HMatrix::from_fn(2, 4, |r, c| {
            sign_element(if (r + c) % 3 == 0 { Sign::Minus } else { Sign::Plus })
        });
        let chi = h_chirotope(&mf, &a, &s).unwrap();
        let pushed = pushforward(&chi, &Morphism::sign_to_phase()).unwrap();
        assert!(weak_matroid_check(&pushed, &builtin("phase").unwrap()).unwrap().holds);
    }
}
