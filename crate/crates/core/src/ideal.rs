//! Monomial ideals kept as canonically sorted minimal generating sets.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::monomial::{monomials_of_degree, Monomial};

/// A monomial ideal of `k[x_1, ..., x_n]`. The generator list is always
/// minimal and sorted, so `==` is ideal equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(n: usize) -> Self {
        Self { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        Self { n, gens: vec![Monomial::one(n)] }
    }

    /// The minimal generating set of the ideal spanned by `monomials`.
    pub fn minimalize<I>(n: usize, monomials: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let monomials: Vec<Monomial> = monomials.into_iter().collect();
        if let Some(m) = monomials.iter().find(|m| m.n() != n) {
            return Err(Error::AmbientMismatch(n, m.n()));
        }
        Ok(Self::minimal_unchecked(n, monomials))
    }

    pub(crate) fn minimal_unchecked(n: usize, mut monomials: Vec<Monomial>) -> Self {
        monomials.sort_unstable();
        monomials.dedup();
        let mut gens: Vec<Monomial> = Vec::with_capacity(monomials.len());
        for m in monomials {
            // Sorted and deduplicated, so only strictly lower degrees can divide `m`.
            let deg = m.degree();
            if !gens.iter().take_while(|g| g.degree() < deg).any(|g| g.divides(&m)) {
                gens.push(m);
            }
        }
        Self { n, gens }
    }

    pub fn principal(m: Monomial) -> Self {
        let n = m.n();
        Self { n, gens: vec![m] }
    }

    /// `(x_1^d, ..., x_q^d)` in `n` variables.
    pub fn prefix_frobenius(q: usize, d: u32, n: usize) -> Result<Self> {
        if q == 0 || q > n {
            return Err(Error::VariableRange { index: q, n });
        }
        if d == 0 {
            return Err(Error::Precondition("bracket power exponent must be >= 1".into()));
        }
        Ok(Self::minimal_unchecked(
            n,
            (0..q).map(|i| Monomial::pure_power(i, d, n)).collect(),
        ))
    }

    /// The maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(n: usize) -> Self {
        Self::minimal_unchecked(n, (0..n).map(|i| Monomial::pure_power(i, 1, n)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    fn same_ambient(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            Err(Error::AmbientMismatch(self.n, other.n))
        } else {
            Ok(())
        }
    }

    pub fn member(&self, w: &Monomial) -> bool {
        let deg = w.degree();
        self.gens
            .iter()
            .take_while(|g| g.degree() <= deg)
            .any(|g| g.divides(w))
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Self) -> bool {
        other.gens.iter().all(|g| self.member(g))
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.same_ambient(other)?;
        let mut prods = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                prods.push(a.checked_mul(b)?);
            }
        }
        Ok(Self::minimal_unchecked(self.n, prods))
    }

    pub fn power(&self, k: u32) -> Result<Self> {
        let mut acc = Self::unit(self.n);
        for _ in 0..k {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.same_ambient(other)?;
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                lcms.push(a.lcm(b));
            }
        }
        Ok(Self::minimal_unchecked(self.n, lcms))
    }

    /// `I : (f)`.
    pub fn colon_monomial(&self, f: &Monomial) -> Result<Self> {
        if f.n() != self.n {
            return Err(Error::AmbientMismatch(self.n, f.n()));
        }
        Ok(Self::minimal_unchecked(
            self.n,
            self.gens
                .iter()
                .map(|g| g.div(&g.gcd(f)).expect("gcd divides"))
                .collect(),
        ))
    }

    /// `I : J`, the intersection of the colons by the generators of `J`.
    pub fn colon(&self, other: &Self) -> Result<Self> {
        self.same_ambient(other)?;
        let (first, rest) = other
            .gens
            .split_first()
            .ok_or(Error::ZeroIdeal("the divisor of a colon"))?;
        let mut acc = self.colon_monomial(first)?;
        for f in rest {
            acc = acc.intersect(&self.colon_monomial(f)?)?;
        }
        Ok(acc)
    }

    /// `I : J^∞`, iterating colons until nothing changes.
    pub fn saturate(&self, other: &Self) -> Result<Self> {
        let mut cur = self.clone();
        loop {
            let next = cur.colon(other)?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// `I : x_var^∞` (0-based `var`): drop `x_var` from every generator.
    pub fn saturate_var(&self, var: usize) -> Result<Self> {
        if var >= self.n {
            return Err(Error::VariableRange { index: var + 1, n: self.n });
        }
        Ok(Self::minimal_unchecked(
            self.n,
            self.gens
                .iter()
                .map(|g| {
                    let mut v = g.exponents().to_vec();
                    v[var] = 0;
                    Monomial::from_vec(v)
                })
                .collect(),
        ))
    }

    /// `I_{>=e}`, generated by the monomials of `I` of degree at least `e`.
    pub fn truncate(&self, e: u32) -> Self {
        let mut out = Vec::new();
        let mut cache: Vec<Option<Vec<Monomial>>> = Vec::new();
        for g in &self.gens {
            let deg = g.degree();
            if deg >= e {
                out.push(g.clone());
                continue;
            }
            let gap = (e - deg) as usize;
            if cache.len() <= gap {
                cache.resize(gap + 1, None);
            }
            let fill = cache[gap].get_or_insert_with(|| monomials_of_degree(self.n, gap as u32));
            out.extend(fill.iter().map(|y| g.mul(y)));
        }
        Self::minimal_unchecked(self.n, out)
    }

    /// Basis of `(S/I)_deg`: degree-`deg` monomials outside `I`.
    pub fn standard_monomials(&self, deg: u32) -> Vec<Monomial> {
        monomials_of_degree(self.n, deg)
            .into_iter()
            .filter(|w| !self.member(w))
            .collect()
    }

    /// Value of the Hilbert function of `S/I` at `deg`.
    pub fn hilbert_function(&self, deg: u32) -> usize {
        self.standard_monomials(deg).len()
    }

    /// Largest degree of a minimal generator.
    pub fn ideal_degree(&self) -> Result<u32> {
        self.gens
            .iter()
            .map(Monomial::degree)
            .max()
            .ok_or(Error::ZeroIdeal("ideal_degree"))
    }

    /// `I ∩ k[x_1, ..., x_k]`, as an ideal in `k` variables.
    pub fn restrict(&self, k: usize) -> Self {
        Self::minimal_unchecked(
            k,
            self.gens
                .iter()
                .filter(|g| g.exponents()[k..].iter().all(|&e| e == 0))
                .map(|g| Monomial::from_vec(g.exponents()[..k].to_vec()))
                .collect(),
        )
    }

    /// The extension of `I` to `k[x_1, ..., x_m]`, `m >= n`.
    pub fn extend(&self, m: usize) -> Self {
        assert!(m >= self.n);
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut v = g.exponents().to_vec();
                v.resize(m, 0);
                Monomial::from_vec(v)
            })
            .collect();
        Self::minimal_unchecked(m, gens)
    }

    /// Componentwise maximum over all generators: the lcm of `G(I)`.
    pub fn lcm_of_generators(&self) -> Monomial {
        self.gens
            .iter()
            .fold(Monomial::one(self.n), |acc, g| acc.lcm(g))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(Monomial::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Serialize, Deserialize)]
struct IdealRecord {
    n: usize,
    gens: Vec<String>,
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IdealRecord {
            n: self.n,
            gens: self.gens.iter().map(Monomial::to_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rec = IdealRecord::deserialize(d)?;
        let gens = rec
            .gens
            .iter()
            .map(|g| Monomial::parse(g, rec.n))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        MonomialIdeal::minimalize(rec.n, gens).map_err(serde::de::Error::custom)
    }
}

/// Dense membership table over the box of exponent vectors with every entry
/// at most `bound`. Vectors outside the box fall back to generator scans.
#[derive(Clone, Debug)]
pub struct MembershipGrid<'a> {
    ideal: &'a MonomialIdeal,
    bound: u32,
    strides: Vec<usize>,
    cells: Option<Vec<bool>>,
}

impl<'a> MembershipGrid<'a> {
    const MAX_CELLS: usize = 1 << 26;

    pub fn new(ideal: &'a MonomialIdeal, bound: u32) -> Self {
        let side = bound as usize + 1;
        let mut strides = vec![1usize; ideal.n];
        for v in (0..ideal.n.saturating_sub(1)).rev() {
            strides[v] = strides[v + 1].saturating_mul(side);
        }
        let size = strides.first().map_or(1, |s| s.saturating_mul(side));
        let cells = (size <= Self::MAX_CELLS).then(|| {
            let mut cells = vec![false; size];
            for g in &ideal.gens {
                if g.exponents().iter().all(|&e| e <= bound) {
                    cells[Self::index_with(&strides, g.exponents())] = true;
                }
            }
            // A cell is a member iff it is a generator or one step above a member.
            let mut exps = vec![0u32; ideal.n];
            for idx in 0..size {
                if !cells[idx] {
                    cells[idx] = (0..ideal.n).any(|v| exps[v] > 0 && cells[idx - strides[v]]);
                }
                for v in (0..ideal.n).rev() {
                    if exps[v] < bound {
                        exps[v] += 1;
                        break;
                    }
                    exps[v] = 0;
                }
            }
            cells
        });
        Self { ideal, bound, strides, cells }
    }

    fn index_with(strides: &[usize], exps: &[u32]) -> usize {
        strides.iter().zip(exps).map(|(s, &e)| s * e as usize).sum()
    }

    pub fn contains(&self, exps: &[u32]) -> bool {
        match &self.cells {
            Some(cells) if exps.iter().all(|&e| e <= self.bound) => {
                cells[Self::index_with(&self.strides, exps)]
            }
            _ => self.ideal.member(&Monomial::from_vec(exps.to_vec())),
        }
    }

    pub fn member(&self, w: &Monomial) -> bool {
        self.contains(w.exponents())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::binomial;

    fn mono(s: &str, n: usize) -> Monomial {
        Monomial::parse(s, n).unwrap()
    }

    fn ideal(gens: &[&str], n: usize) -> MonomialIdeal {
        MonomialIdeal::minimalize(n, gens.iter().map(|g| mono(g, n))).unwrap()
    }

    fn text(i: &MonomialIdeal) -> Vec<String> {
        i.gens().iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(text(&ideal(&["x1", "x1^2"], 2)), ["x1"]);
        assert_eq!(
            text(&ideal(&["x1^2*x2", "x1*x2^2", "x1^2*x2^2"], 2)),
            ["x1^2*x2", "x1*x2^2"]
        );
        assert!(ideal(&[], 2).is_zero());
        let err = MonomialIdeal::minimalize(2, vec![Monomial::one(2), Monomial::one(3)]);
        assert_eq!(err, Err(Error::AmbientMismatch(2, 3)));
    }

    #[test]
    fn membership() {
        assert!(ideal(&["x1^3"], 1).member(&mono("x1^5", 1)));
        assert!(!ideal(&["x1^2", "x2^2"], 2).member(&mono("x1*x2", 2)));
        assert!(!MonomialIdeal::zero(2).member(&Monomial::one(2)));
        assert!(MonomialIdeal::unit(2).member(&Monomial::one(2)));
    }

    #[test]
    fn products_and_powers() {
        let x1 = ideal(&["x1"], 2);
        let x2 = ideal(&["x2"], 2);
        assert_eq!(text(&x1.multiply(&x2).unwrap()), ["x1*x2"]);
        let m = MonomialIdeal::maximal(2);
        assert_eq!(text(&m.multiply(&m).unwrap()), ["x1^2", "x1*x2", "x2^2"]);
        let m4 = MonomialIdeal::prefix_frobenius(2, 4, 2).unwrap();
        assert_eq!(
            text(&m.multiply(&m4).unwrap()),
            ["x1^5", "x1^4*x2", "x1*x2^4", "x2^5"]
        );
        assert!(MonomialIdeal::zero(2).multiply(&m).unwrap().is_zero());
        assert_eq!(MonomialIdeal::unit(2).multiply(&m).unwrap(), m);
        assert!(m.power(0).unwrap().is_unit());
        assert_eq!(m.power(2).unwrap().gens().len(), 3);
        let sq = MonomialIdeal::prefix_frobenius(3, 4, 3).unwrap().power(2).unwrap();
        assert_eq!(sq.gens().len(), 6);
        assert!(sq.gens().iter().all(|g| g.degree() == 8));
    }

    #[test]
    fn prefix_frobenius_examples() {
        assert_eq!(MonomialIdeal::prefix_frobenius(3, 1, 3).unwrap(), MonomialIdeal::maximal(3));
        assert_eq!(
            text(&MonomialIdeal::prefix_frobenius(2, 4, 3).unwrap()),
            ["x1^4", "x2^4"]
        );
        assert_eq!(
            text(&MonomialIdeal::prefix_frobenius(3, 12, 3).unwrap()),
            ["x1^12", "x2^12", "x3^12"]
        );
        assert!(MonomialIdeal::prefix_frobenius(4, 1, 3).is_err());
        assert!(MonomialIdeal::prefix_frobenius(0, 1, 3).is_err());
    }

    #[test]
    fn colon_and_intersection() {
        let i = ideal(&["x1^2"], 2);
        assert_eq!(text(&i.colon(&ideal(&["x1"], 2)).unwrap()), ["x1"]);
        let ci = ideal(&["x1^2", "x2^2"], 2);
        assert_eq!(
            text(&ci.colon(&MonomialIdeal::maximal(2)).unwrap()),
            ["x1^2", "x1*x2", "x2^2"]
        );
        assert_eq!(ci.colon(&MonomialIdeal::unit(2)).unwrap(), ci);
        assert_eq!(ci.colon(&MonomialIdeal::zero(2)), Err(Error::ZeroIdeal("the divisor of a colon")));
        assert_eq!(
            text(&ideal(&["x1"], 2).intersect(&ideal(&["x2"], 2)).unwrap()),
            ["x1*x2"]
        );
        assert_eq!(ci.intersect(&ci).unwrap(), ci);
        assert_eq!(
            text(&ideal(&["x1", "x2^2"], 2).intersect(&ideal(&["x1^2", "x2"], 2)).unwrap()),
            ["x1^2", "x1*x2", "x2^2"]
        );
    }

    #[test]
    fn saturation() {
        let i = ideal(&["x1*x2"], 2);
        let x2 = ideal(&["x2"], 2);
        assert_eq!(text(&i.saturate(&x2).unwrap()), ["x1"]);
        assert_eq!(i.saturate_var(1).unwrap(), i.saturate(&x2).unwrap());
        let ci = ideal(&["x1^2", "x2^2"], 2);
        assert!(ci.saturate(&MonomialIdeal::maximal(2)).unwrap().is_unit());
    }

    #[test]
    fn truncation() {
        assert_eq!(text(&ideal(&["x1"], 2).truncate(2)), ["x1^2", "x1*x2"]);
        let ci = ideal(&["x1^2", "x2^2"], 2);
        assert_eq!(ci.truncate(0), ci);
        assert_eq!(MonomialIdeal::maximal(2).truncate(3).gens().len(), 4);
    }

    #[test]
    fn standard_monomials_examples() {
        assert_eq!(
            ideal(&["x1^2", "x2^2"], 2).standard_monomials(2),
            vec![mono("x1*x2", 2)]
        );
        assert_eq!(MonomialIdeal::zero(3).standard_monomials(2).len(), 6);
        assert!(MonomialIdeal::maximal(3).standard_monomials(1).is_empty());
    }

    #[test]
    fn degrees() {
        assert_eq!(MonomialIdeal::maximal(2).ideal_degree(), Ok(1));
        assert_eq!(ideal(&["x1", "x2^3"], 2).ideal_degree(), Ok(3));
        assert!(MonomialIdeal::zero(2).ideal_degree().is_err());
    }

    #[test]
    fn restrict_and_extend() {
        let i = ideal(&["x1^2", "x1*x3", "x2^2"], 3);
        assert_eq!(text(&i.restrict(2)), ["x1^2", "x2^2"]);
        assert_eq!(i.restrict(2).extend(3).n(), 3);
        assert_eq!(i.lcm_of_generators().to_string(), "x1^2*x2^2*x3");
    }

    #[test]
    fn serde_record() {
        let i = ideal(&["x1^2", "x1*x3"], 3);
        let js = serde_json::to_string(&i).unwrap();
        assert_eq!(js, r#"{"n":3,"gens":["x1^2","x1*x3"]}"#);
        let back: MonomialIdeal = serde_json::from_str(&js).unwrap();
        assert_eq!(back, i);
    }

    #[test]
    fn grid_agrees_with_generator_scan() {
        let i = ideal(&["x1^3", "x1*x2^2", "x2^4*x3", "x3^5"], 3);
        let grid = MembershipGrid::new(&i, 4);
        for deg in 0..9 {
            for w in monomials_of_degree(3, deg) {
                assert_eq!(grid.member(&w), i.member(&w), "{w}");
            }
        }
        let empty = MonomialIdeal::zero(2);
        assert!(!MembershipGrid::new(&empty, 3).contains(&[1, 1]));
        assert!(MembershipGrid::new(&MonomialIdeal::unit(2), 3).contains(&[0, 0]));
    }

    #[test]
    fn hilbert_count_identity() {
        let i = ideal(&["x1^3", "x1*x2^2", "x3^4"], 3);
        for deg in 0..8 {
            let inside = monomials_of_degree(3, deg).iter().filter(|w| i.member(w)).count();
            assert_eq!(
                (i.hilbert_function(deg) + inside) as u128,
                binomial(deg as u64 + 2, 2)
            );
        }
    }
}
