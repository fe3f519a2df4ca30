//! Generator files: `#` comment lines, `n=<int>` on the first other line,
//! then one monomial per line.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorFile {
    pub n: usize,
    /// Generators as listed, not minimalized.
    pub gens: Vec<Monomial>,
}

impl GeneratorFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .enumerate()
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (_, header) = lines
            .next()
            .ok_or_else(|| Error::Parse("generator file has no `n=<int>` line".into()))?;
        let n = header
            .strip_prefix("n=")
            .and_then(|v| v.trim().parse::<usize>().ok())
            .ok_or_else(|| Error::Parse(format!("expected `n=<int>`, found `{header}`")))?;
        let gens = lines
            .map(|(k, l)| {
                Monomial::parse(l, n).map_err(|e| Error::Parse(format!("line {}: {e}", k + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { n, gens })
    }

    pub fn ideal(&self) -> MonomialIdeal {
        MonomialIdeal::minimalize(self.n, self.gens.iter().cloned())
            .expect("parsed generators share the declared ambient")
    }

    pub fn render(&self) -> String {
        let mut out = format!("n={}\n", self.n);
        for g in &self.gens {
            let _ = writeln!(out, "{g}");
        }
        out
    }
}

impl From<&MonomialIdeal> for GeneratorFile {
    fn from(ideal: &MonomialIdeal) -> Self {
        Self { n: ideal.n(), gens: ideal.gens().to_vec() }
    }
}
