use std::fmt;
use std::sync::Arc;

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::{Error, Result};

use super::finite::FiniteTable;

/// An element of some hyperfield. `Zero` is the additive identity in every
/// hyperfield (the value `∞` of the tropical hyperfield).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HElem {
    Zero,
    /// Non-zero element of a finite hyperfield by table index; `Finite(1)` is
    /// the unit.
    Finite(usize),
    /// Non-zero tropical value; the unit is `Real(0)`.
    Real(Rational64),
    /// `e^{iπθ}` with `θ ∈ [0, 2)`.
    Phase(Rational64),
}

impl HElem {
    pub fn is_zero(&self) -> bool {
        matches!(self, HElem::Zero)
    }

    pub fn real(v: i64) -> HElem {
        HElem::Real(Rational64::from_integer(v))
    }

    /// `e^{iπ·num/den}`, normalised into `[0, 2)`.
    pub fn phase(num: i64, den: i64) -> HElem {
        HElem::Phase(normalize_angle(Rational64::new(num, den)))
    }
}

pub(crate) fn normalize_angle(t: Rational64) -> Rational64 {
    let two = Rational64::from_integer(2);
    let r = t - (t / two).floor() * two;
    if r < Rational64::zero() {
        r + two
    } else {
        r
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Infinite {
    /// Min-plus: `a ⊞ b = {min}` for `a ≠ b`, `a ⊞ a = [a, ∞]`.
    Tropical,
    /// Open minor arcs; `w ⊞ (−w) = {w, −w, 0}`.
    Phase,
    /// Closed minor arcs; `w ⊞ (−w)` everything.
    TropicalPhase,
    /// The tropical units with `a ⊞ b = {a, b}` for `a ≠ b` and `a ⊞ a`
    /// everything.
    InflatedTropical,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Kind {
    Finite(FiniteTable),
    Infinite(Infinite),
}

/// A hyperfield with a membership oracle for its hypersums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperfield {
    name: String,
    kind: Arc<Kind>,
    ip_flag: Option<bool>,
}

impl Hyperfield {
    fn finite(name: String, table: FiniteTable) -> Hyperfield {
        Hyperfield {
            name,
            kind: Arc::new(Kind::Finite(table)),
            ip_flag: None,
        }
    }

    fn infinite(name: &str, kind: Infinite) -> Hyperfield {
        let ip = matches!(kind, Infinite::TropicalPhase | Infinite::InflatedTropical);
        Hyperfield {
            name: name.to_string(),
            kind: Arc::new(Kind::Infinite(kind)),
            ip_flag: Some(ip),
        }
    }

    pub fn krasner() -> Hyperfield {
        Hyperfield::finite("krasner".into(), FiniteTable::krasner())
    }

    pub fn sign() -> Hyperfield {
        Hyperfield::finite("sign".into(), FiniteTable::sign())
    }

    pub fn tropical() -> Hyperfield {
        Hyperfield::infinite("tropical", Infinite::Tropical)
    }

    pub fn phase() -> Hyperfield {
        Hyperfield::infinite("phase", Infinite::Phase)
    }

    pub fn tropical_phase() -> Hyperfield {
        Hyperfield::infinite("tropical_phase", Infinite::TropicalPhase)
    }

    /// Zero adjoined to the cyclic group of order `m`; distinct units sum to
    /// the whole group.
    pub fn weak_group(m: usize) -> Result<Hyperfield> {
        Ok(Hyperfield::finite(
            format!("weak_group({m})"),
            FiniteTable::weak_group(m)?,
        ))
    }

    /// Zero adjoined to the cyclic group of order `m`; distinct units sum to
    /// the pair of them.
    pub fn massouros(m: usize) -> Result<Hyperfield> {
        Ok(Hyperfield::finite(
            format!("massouros({m})"),
            FiniteTable::massouros(m)?,
        ))
    }

    /// The prime field `F_p`.
    pub fn prime_field(p: usize) -> Result<Hyperfield> {
        Ok(Hyperfield::finite(format!("field({p})"), FiniteTable::prime_field(p)?))
    }

    /// `F_p` modulo its multiplicative subgroup of order `k`.
    pub fn quotient(p: usize, k: usize) -> Result<Hyperfield> {
        Ok(Hyperfield::finite(
            format!("quotient({p},{k})"),
            FiniteTable::quotient(p, k)?,
        ))
    }

    /// The canonical inflation. The inflation of the phase hyperfield is the
    /// tropical phase hyperfield.
    pub fn inflated(&self) -> Hyperfield {
        let name = format!("inflated({})", self.name);
        match &*self.kind {
            Kind::Finite(t) => Hyperfield::finite(name, t.inflated()),
            Kind::Infinite(Infinite::Phase | Infinite::TropicalPhase) => {
                Hyperfield::infinite(&name, Infinite::TropicalPhase)
            }
            Kind::Infinite(Infinite::Tropical | Infinite::InflatedTropical) => {
                Hyperfield::infinite(&name, Infinite::InflatedTropical)
            }
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub(crate) fn kind(&self) -> &Kind {
        &self.kind
    }

    pub fn is_finite(&self) -> bool {
        matches!(*self.kind, Kind::Finite(_))
    }

    /// The structural inflation-property flag carried by infinite built-ins.
    pub fn ip_flag(&self) -> Option<bool> {
        self.ip_flag
    }

    /// All elements, zero first; `None` for infinite hyperfields.
    pub fn elements(&self) -> Option<Vec<HElem>> {
        match &*self.kind {
            Kind::Finite(t) => Some((0..t.len()).map(from_index).collect()),
            Kind::Infinite(_) => None,
        }
    }

    pub fn zero(&self) -> HElem {
        HElem::Zero
    }

    pub fn one(&self) -> HElem {
        match &*self.kind {
            Kind::Finite(_) => HElem::Finite(1),
            Kind::Infinite(Infinite::Tropical | Infinite::InflatedTropical) => HElem::Real(Rational64::zero()),
            Kind::Infinite(_) => HElem::Phase(Rational64::zero()),
        }
    }

    /// Whether `x` is an element of this hyperfield.
    pub fn contains(&self, x: &HElem) -> bool {
        match (&*self.kind, x) {
            (_, HElem::Zero) => true,
            (Kind::Finite(t), HElem::Finite(i)) => *i >= 1 && *i < t.len(),
            (Kind::Infinite(Infinite::Tropical | Infinite::InflatedTropical), HElem::Real(_)) => true,
            (Kind::Infinite(Infinite::Phase | Infinite::TropicalPhase), HElem::Phase(t)) => {
                *t >= Rational64::zero() && *t < Rational64::from_integer(2)
            }
            _ => false,
        }
    }

    pub fn check_element(&self, x: &HElem) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::DomainMismatch(format!(
                "{x:?} is not an element of {}",
                self.name
            )))
        }
    }

    pub fn neg(&self, x: &HElem) -> HElem {
        match (&*self.kind, x) {
            (_, HElem::Zero) => HElem::Zero,
            (Kind::Finite(t), HElem::Finite(i)) => from_index(t.neg[*i]),
            (_, HElem::Real(v)) => HElem::Real(*v),
            (_, HElem::Phase(a)) => HElem::Phase(normalize_angle(a + Rational64::one())),
            _ => panic!("{x:?} is not an element of {}", self.name),
        }
    }

    pub fn mul(&self, x: &HElem, y: &HElem) -> HElem {
        match (&*self.kind, x, y) {
            (_, HElem::Zero, _) | (_, _, HElem::Zero) => HElem::Zero,
            (Kind::Finite(t), HElem::Finite(i), HElem::Finite(j)) => from_index(t.mul[*i][*j]),
            (_, HElem::Real(a), HElem::Real(b)) => HElem::Real(a + b),
            (_, HElem::Phase(a), HElem::Phase(b)) => HElem::Phase(normalize_angle(a + b)),
            _ => panic!("{x:?} and {y:?} are not both elements of {}", self.name),
        }
    }

    /// `x ∈ t_1 ⊞ … ⊞ t_k`; the empty sum is `{0}`.
    pub fn sum_contains(&self, x: &HElem, terms: &[HElem]) -> bool {
        match &*self.kind {
            Kind::Finite(t) => {
                let idx: Vec<usize> = terms.iter().map(to_index).collect();
                t.fold(&idx) >> to_index(x) & 1 == 1
            }
            Kind::Infinite(kind) => infinite_sum_contains(*kind, x, terms),
        }
    }

    /// `0 ∈ t_1 ⊞ … ⊞ t_k`.
    pub fn sum_contains_zero(&self, terms: &[HElem]) -> bool {
        self.sum_contains(&HElem::Zero, terms)
    }

    /// Exhaustive verification of the hyperfield axioms.
    pub fn check_axioms(&self) -> Result<()> {
        match &*self.kind {
            Kind::Finite(t) => t.check_axioms(),
            Kind::Infinite(_) => Err(Error::Undecidable(format!(
                "axioms of the infinite hyperfield {}",
                self.name
            ))),
        }
    }

    /// Display label of an element.
    pub fn label(&self, x: &HElem) -> String {
        match (&*self.kind, x) {
            (Kind::Infinite(Infinite::Tropical | Infinite::InflatedTropical), HElem::Zero) => "inf".into(),
            (_, HElem::Zero) => "0".into(),
            (Kind::Finite(t), HElem::Finite(i)) if *i < t.len() => t.labels[*i].clone(),
            (_, HElem::Real(v)) => v.to_string(),
            (_, HElem::Phase(a)) => phase_label(*a),
            _ => format!("{x:?}"),
        }
    }

    /// Inverse of [`Hyperfield::label`].
    pub fn parse_label(&self, s: &str) -> Option<HElem> {
        let s = s.trim();
        match &*self.kind {
            Kind::Finite(t) => t.labels.iter().position(|l| l == s).map(from_index),
            Kind::Infinite(Infinite::Tropical | Infinite::InflatedTropical) => {
                if s == "inf" {
                    Some(HElem::Zero)
                } else {
                    s.parse::<Rational64>().ok().map(HElem::Real)
                }
            }
            Kind::Infinite(_) => match s {
                "0" => Some(HElem::Zero),
                "1" => Some(HElem::phase(0, 1)),
                "i" => Some(HElem::phase(1, 2)),
                "-1" => Some(HElem::phase(1, 1)),
                "-i" => Some(HElem::phase(3, 2)),
                _ => s
                    .strip_prefix("exp(")
                    .and_then(|r| r.strip_suffix("πi)"))
                    .and_then(|r| r.parse::<Rational64>().ok())
                    .map(|a| HElem::Phase(normalize_angle(a))),
            },
        }
    }
}

impl fmt::Display for Hyperfield {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

fn phase_label(a: Rational64) -> String {
    let (n, d) = (*a.numer(), *a.denom());
    match (n, d) {
        (0, _) => "1".into(),
        (1, 2) => "i".into(),
        (1, 1) => "-1".into(),
        (3, 2) => "-i".into(),
        _ => format!("exp({a}πi)"),
    }
}

pub(crate) fn from_index(i: usize) -> HElem {
    if i == 0 {
        HElem::Zero
    } else {
        HElem::Finite(i)
    }
}

pub(crate) fn to_index(x: &HElem) -> usize {
    match x {
        HElem::Zero => 0,
        HElem::Finite(i) => *i,
        _ => panic!("{x:?} is not an element of a finite hyperfield"),
    }
}

/// Counter-clockwise distance from `from` to `to`, in `[0, 2)`.
fn ccw(from: Rational64, to: Rational64) -> Rational64 {
    normalize_angle(to - from)
}

/// Where the non-zero angles sit on the circle: their largest circular gap
/// and the arc (start, length) that contains them all.
struct Spread {
    count: usize,
    gap: Rational64,
    start: Rational64,
    length: Rational64,
}

fn spread(angles: &[Rational64]) -> Option<Spread> {
    let mut a: Vec<Rational64> = angles.to_vec();
    a.sort();
    a.dedup();
    let m = a.len();
    if m == 0 {
        return None;
    }
    let two = Rational64::from_integer(2);
    if m == 1 {
        return Some(Spread {
            count: 1,
            gap: two,
            start: a[0],
            length: Rational64::zero(),
        });
    }
    let mut best = (Rational64::zero(), 0);
    for i in 0..m {
        let g = if i + 1 < m { a[i + 1] - a[i] } else { a[0] + two - a[i] };
        if g > best.0 {
            best = (g, i);
        }
    }
    let (gap, i) = best;
    Some(Spread {
        count: m,
        gap,
        start: a[(i + 1) % m],
        length: two - gap,
    })
}

fn infinite_sum_contains(kind: Infinite, x: &HElem, terms: &[HElem]) -> bool {
    let nonzero: Vec<&HElem> = terms.iter().filter(|t| !t.is_zero()).collect();
    match kind {
        Infinite::Tropical | Infinite::InflatedTropical => {
            let mut vals: Vec<Rational64> = nonzero
                .iter()
                .map(|t| match t {
                    HElem::Real(v) => *v,
                    _ => panic!("{t:?} is not tropical"),
                })
                .collect();
            vals.sort();
            let target = match x {
                HElem::Zero => None,
                HElem::Real(v) => Some(*v),
                _ => return false,
            };
            let Some(&min) = vals.first() else {
                return target.is_none();
            };
            let repeated = vals.windows(2).any(|w| w[0] == w[1]);
            if kind == Infinite::Tropical {
                let twice = vals.len() > 1 && vals[1] == min;
                match target {
                    None => twice,
                    Some(v) if twice => v >= min,
                    Some(v) => v == min,
                }
            } else if vals.len() == 1 {
                target == Some(min)
            } else if repeated {
                true
            } else {
                target.is_some_and(|v| vals.binary_search(&v).is_ok())
            }
        }
        Infinite::Phase | Infinite::TropicalPhase => {
            let angles: Vec<Rational64> = nonzero
                .iter()
                .map(|t| match t {
                    HElem::Phase(a) => *a,
                    _ => panic!("{t:?} is not a phase"),
                })
                .collect();
            let target = match x {
                HElem::Zero => None,
                HElem::Phase(a) => Some(*a),
                _ => return false,
            };
            let Some(s) = spread(&angles) else {
                return target.is_none();
            };
            if s.count == 1 {
                return target == Some(s.start);
            }
            let half = Rational64::one();
            let closed = kind == Infinite::TropicalPhase;
            if s.gap < half || (closed && s.gap == half) {
                return true;
            }
            if s.gap == half && s.count == 2 {
                // Two antipodal phases.
                return target.is_none_or(|a| a == s.start || a == normalize_angle(s.start + half));
            }
            let Some(a) = target else {
                return false;
            };
            let offset = ccw(s.start, a);
            if closed {
                offset <= s.length
            } else {
                offset > Rational64::zero() && offset < s.length
            }
        }
    }
}

/// Resolves a built-in name: `krasner`, `sign`, `tropical`, `phase`,
/// `tropical_phase`, `weak_group(m)`, `massouros(m)`, `field(p)`,
/// `quotient(p,k)` and `inflated(<name>)`.
pub fn builtin(name: &str) -> Result<Hyperfield> {
    let name = name.trim();
    let unknown = || Error::UnknownHyperfield(name.to_string());
    match name {
        "krasner" => return Ok(Hyperfield::krasner()),
        "sign" => return Ok(Hyperfield::sign()),
        "tropical" => return Ok(Hyperfield::tropical()),
        "phase" => return Ok(Hyperfield::phase()),
        "tropical_phase" => return Ok(Hyperfield::tropical_phase()),
        _ => {}
    }
    let (head, args) = name
        .strip_suffix(')')
        .and_then(|s| s.split_once('('))
        .ok_or_else(unknown)?;
    if head == "inflated" {
        return Ok(builtin(args)?.inflated());
    }
    let nums: Vec<usize> = args
        .split(',')
        .map(|a| a.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| unknown())?;
    match (head, nums.as_slice()) {
        ("weak_group", [m]) => Hyperfield::weak_group(*m),
        ("massouros", [m]) => Hyperfield::massouros(*m),
        ("field", [p]) => Hyperfield::prime_field(*p),
        ("quotient", [p, k]) => Hyperfield::quotient(*p, *k),
        _ => Err(unknown()),
    }
}

/// The inflation property `1 ⊞ (−1) = ℍ`. Finite hyperfields are decided
/// exhaustively, with the equivalent characterisations cross-checked;
/// infinite ones answer from their structural flag.
pub fn has_ip(h: &Hyperfield) -> Result<bool> {
    match h.kind() {
        Kind::Finite(t) => {
            let conditions = t.ip_conditions();
            if conditions.iter().any(|&c| c != conditions[0]) {
                return Err(Error::Axiom(format!(
                    "inflation-property characterisations disagree on {}: {conditions:?}",
                    h.name()
                )));
            }
            Ok(conditions[0])
        }
        Kind::Infinite(_) => h
            .ip_flag()
            .ok_or_else(|| Error::Undecidable(format!("inflation property of {}", h.name()))),
    }
}
