//! Index calculus for Legendrian and transversal links: Maslov index `μ`
//! and Thurston–Bennequin number `tb`, tracked together with the component
//! count. Only indices are modelled, never isotopy classes.

mod front;

use std::fmt;

use thiserror::Error;

use crate::braid::BraidWord;
use crate::garside::half_twist;

pub use front::{front_mu, front_tb, parse_front, write_front, FrontDiagram};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ContactError {
    #[error("tb={tb}, mu={mu} violates the parity rule for {components} component(s)")]
    Parity { mu: i64, tb: i64, components: usize },
    #[error("a link needs at least one component")]
    NoComponents,
    #[error("the braid must be positive")]
    NotPositive,
    #[error("expected a knot, got {0} components")]
    NotAKnot(usize),
    #[error("cusp count {0} is odd")]
    OddCusps(usize),
    #[error("down and up cusps differ by an odd number ({down} vs {up})")]
    CuspImbalance { down: usize, up: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// `(μ, tb)` of a Legendrian link with `m` components, where `tb ± μ ≡ m`
/// (mod 2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LegendrianSpec {
    mu: i64,
    tb: i64,
    components: usize,
    tag: Option<String>,
}

impl LegendrianSpec {
    pub fn new(mu: i64, tb: i64, components: usize) -> Result<Self, ContactError> {
        if components == 0 {
            return Err(ContactError::NoComponents);
        }
        // tb + μ and tb − μ have the same parity, so one check covers both
        if (tb + mu - components as i64).rem_euclid(2) != 0 {
            return Err(ContactError::Parity { mu, tb, components });
        }
        Ok(LegendrianSpec { mu, tb, components, tag: None })
    }

    pub fn with_tag(mut self, tag: impl Into<String>) -> Self {
        self.tag = Some(tag.into());
        self
    }

    pub fn mu(&self) -> i64 {
        self.mu
    }

    pub fn tb(&self) -> i64 {
        self.tb
    }

    pub fn components(&self) -> usize {
        self.components
    }

    pub fn tag(&self) -> Option<&str> {
        self.tag.as_deref()
    }

    fn derived(&self, mu: i64, tb: i64, components: usize) -> Self {
        LegendrianSpec::new(mu, tb, components).expect("index operations preserve parity")
    }
}

impl fmt::Display for LegendrianSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mu={} tb={} components={}", self.mu, self.tb, self.components)?;
        if let Some(tag) = &self.tag {
            write!(f, " [{tag}]")?;
        }
        Ok(())
    }
}

/// The unknot `L_{p,q} = ζ₊^p ζ₋^q (L_{0,0})`.
pub fn l_pq(p: u32, q: u32) -> LegendrianSpec {
    let (p, q) = (i64::from(p), i64::from(q));
    LegendrianSpec::new(p - q, -1 - p - q, 1)
        .expect("unknot indices have odd tb ± mu")
        .with_tag(format!("L_{{{p},{q}}}"))
}

/// Zig-zag stabilization: `tb − 1`, `μ ± 1`.
pub fn zeta(spec: &LegendrianSpec, sign: Sign) -> LegendrianSpec {
    spec.derived(spec.mu + sign.value(), spec.tb - 1, spec.components)
}

/// Transversal stabilization on self-linking numbers.
pub fn rho_index(tb: i64) -> i64 {
    tb - 2
}

/// Self-linking number of the positive or negative transversal push-off.
pub fn transversalize(spec: &LegendrianSpec, sign: Sign) -> i64 {
    spec.tb + sign.value() * spec.mu
}

/// Indices of `a ⊔ b` with linking number `lk` between them.
pub fn disjoint_union(a: &LegendrianSpec, b: &LegendrianSpec, lk: i64) -> LegendrianSpec {
    a.derived(a.mu + b.mu, a.tb + 2 * lk + b.tb, a.components + b.components)
}

/// Indices of the Legendrian closure of a positive braid `b ∈ B_n` along a
/// Legendrian knot `a`: `μ = n·μ_a`, `tb = n²·tb_a + deg(b)`.
pub fn closure_indices(a: &LegendrianSpec, b: &BraidWord) -> Result<LegendrianSpec, ContactError> {
    if a.components != 1 {
        return Err(ContactError::NotAKnot(a.components));
    }
    if !b.is_positive() {
        return Err(ContactError::NotPositive);
    }
    let n = b.strands() as i64;
    Ok(a.derived(a.mu * n, n * n * a.tb + b.degree(), b.components()))
}

/// Side-by-side comparison of the closure indices of `L_{p,q} ⋉ b` with the
/// braid `Δ^{−p−q−1}·b`. Reported, not asserted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureComparison {
    pub indices: LegendrianSpec,
    pub braid: BraidWord,
    pub braid_self_linking: i64,
    pub braid_components: usize,
}

impl ClosureComparison {
    pub fn components_agree(&self) -> bool {
        self.indices.components == self.braid_components
    }

    /// Which of `tb`, `tb + μ`, `tb − μ` (if any) equals the braid's
    /// self-linking number.
    pub fn matching_index(&self) -> Option<&'static str> {
        let sl = self.braid_self_linking;
        let i = &self.indices;
        if sl == i.tb + i.mu {
            Some("tb+mu")
        } else if sl == i.tb - i.mu {
            Some("tb-mu")
        } else if sl == i.tb {
            Some("tb")
        } else {
            None
        }
    }
}

impl fmt::Display for ClosureComparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "indices {} | braid sl={} components={} | match {}",
            self.indices,
            self.braid_self_linking,
            self.braid_components,
            self.matching_index().unwrap_or("none")
        )
    }
}

pub fn compare_closure(p: u32, q: u32, b: &BraidWord) -> Result<ClosureComparison, ContactError> {
    let indices = closure_indices(&l_pq(p, q), b)?;
    let n = b.strands();
    let delta_inv = half_twist(n).expect("n ≥ 1").invert();
    let mut letters = Vec::new();
    for _ in 0..=(p + q) {
        letters.extend_from_slice(delta_inv.letters());
    }
    letters.extend_from_slice(b.letters());
    let braid = BraidWord::new(n, letters).expect("same strand count");
    Ok(ClosureComparison {
        indices,
        braid_self_linking: braid.self_linking(),
        braid_components: braid.components(),
        braid,
    })
}
