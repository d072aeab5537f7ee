//! Front diagrams reduced to their counts. Text format, one line:
//!
//! ```text
//! front crossings+=0 crossings-=0 cusps_up=1 cusps_down=1 components=1
//! ```

use super::{ContactError, LegendrianSpec};
use crate::braid::strip_comment;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FrontDiagram {
    pub positive_crossings: usize,
    pub negative_crossings: usize,
    pub up_cusps: usize,
    pub down_cusps: usize,
    pub components: usize,
}

impl FrontDiagram {
    pub fn new(
        positive_crossings: usize,
        negative_crossings: usize,
        up_cusps: usize,
        down_cusps: usize,
        components: usize,
    ) -> Result<Self, ContactError> {
        if components == 0 {
            return Err(ContactError::NoComponents);
        }
        let f = FrontDiagram { positive_crossings, negative_crossings, up_cusps, down_cusps, components };
        if !f.cusps().is_multiple_of(2) {
            return Err(ContactError::OddCusps(f.cusps()));
        }
        Ok(f)
    }

    /// The standard front of `L_{0,0}`: two cusps, no crossings.
    pub fn unknot() -> Self {
        FrontDiagram::new(0, 0, 1, 1, 1).expect("valid counts")
    }

    pub fn cusps(&self) -> usize {
        self.up_cusps + self.down_cusps
    }

    /// Adds a zig-zag: two down cusps for `+`, two up cusps for `−`.
    pub fn zigzag(&self, sign: super::Sign) -> Self {
        let mut f = *self;
        match sign {
            super::Sign::Plus => f.down_cusps += 2,
            super::Sign::Minus => f.up_cusps += 2,
        }
        f
    }

    /// Orientation reversal swaps up and down cusps; crossing signs of a
    /// knot are unchanged.
    pub fn reversed(&self) -> Self {
        FrontDiagram { up_cusps: self.down_cusps, down_cusps: self.up_cusps, ..*self }
    }

    pub fn to_spec(&self) -> Result<LegendrianSpec, ContactError> {
        let mu = front_mu(self)?;
        LegendrianSpec::new(mu, front_tb(self), self.components)
    }
}

/// Writhe minus half the number of cusps.
pub fn front_tb(f: &FrontDiagram) -> i64 {
    f.positive_crossings as i64 - f.negative_crossings as i64 - (f.cusps() / 2) as i64
}

/// `(down − up) / 2` for a single component.
pub fn front_mu(f: &FrontDiagram) -> Result<i64, ContactError> {
    if f.components != 1 {
        return Err(ContactError::NotAKnot(f.components));
    }
    let diff = f.down_cusps as i64 - f.up_cusps as i64;
    if diff % 2 != 0 {
        return Err(ContactError::CuspImbalance { down: f.down_cusps, up: f.up_cusps });
    }
    Ok(diff / 2)
}

pub fn write_front(f: &FrontDiagram) -> String {
    format!(
        "front crossings+={} crossings-={} cusps_up={} cusps_down={} components={}\n",
        f.positive_crossings, f.negative_crossings, f.up_cusps, f.down_cusps, f.components
    )
}

pub fn parse_front(text: &str) -> Result<FrontDiagram, ContactError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, strip_comment(l).trim()))
        .filter(|(_, l)| !l.is_empty());
    let err = |line: usize, message: String| ContactError::Parse { line, message };
    let (k, line) = lines.next().ok_or_else(|| err(1, "empty front file".into()))?;
    if let Some((k2, _)) = lines.next() {
        return Err(err(k2, "unexpected content after the front line".into()));
    }
    let mut tokens = line.split_whitespace();
    if tokens.next() != Some("front") {
        return Err(err(k, "expected `front ...`".into()));
    }
    const KEYS: [&str; 5] = ["crossings+", "crossings-", "cusps_up", "cusps_down", "components"];
    let mut values: [Option<usize>; 5] = [None; 5];
    for tok in tokens {
        let (key, value) = tok.split_once('=').ok_or_else(|| err(k, format!("bad field `{tok}`")))?;
        let slot = KEYS
            .iter()
            .position(|&x| x == key)
            .ok_or_else(|| err(k, format!("unknown field `{key}`")))?;
        if values[slot].is_some() {
            return Err(err(k, format!("repeated field `{key}`")));
        }
        values[slot] = Some(value.parse().map_err(|_| err(k, format!("bad value `{value}`")))?);
    }
    let get = |i: usize| values[i].ok_or_else(|| err(k, format!("missing field `{}`", KEYS[i])));
    FrontDiagram::new(get(0)?, get(1)?, get(2)?, get(3)?, get(4)?)
}
