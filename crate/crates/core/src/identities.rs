//! Catalog of dissection identities and coefficient-sign claims.
//!
//! Each [`IdentityCase`] names two sides built from series-engine operations,
//! or a single side plus a sign predicate. `order` always refers to the
//! series being compared: for a 3-dissection at order `N` the underlying
//! difference series is expanded to order `3N + r`.
//!
//! Cases that involve `P(q)` are evaluated once with the Lambert-series form
//! and once with the cubic-theta form, and both must pass.

use rayon::prelude::*;
use rug::Integer;
use serde::Serialize;

use crate::bicrank::{diff_series, Modulus};
use crate::error::{Error, Result};
use crate::report::ser_integer;
use crate::series::{
    cubic_lattice_sum, cubic_theta, eta_quotient, gauss_theta, lambert_p, EtaQuotientSpec, Factor,
    PowerSeries,
};

/// Which expansion stands in for `P(q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PForm {
    Lambert,
    Cubic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityKind {
    Equality,
    AllPositive,
    AllNonnegative,
    AllNegative,
    /// Sign counts only; never a pass/fail.
    SignPattern,
}

impl IdentityKind {
    fn admits(self, c: &Integer) -> bool {
        match self {
            IdentityKind::AllPositive => c.cmp0().is_gt(),
            IdentityKind::AllNonnegative => c.cmp0().is_ge(),
            IdentityKind::AllNegative => c.cmp0().is_lt(),
            IdentityKind::Equality | IdentityKind::SignPattern => true,
        }
    }
}

/// Expansion context handed to the side builders.
pub struct Ctx {
    pub order: usize,
    pub p_form: PForm,
}

impl Ctx {
    /// `prod f_k^e` with `f_k = (q^k; q^k)_∞`.
    fn etas(&self, pairs: &[(u32, i32)]) -> Result<PowerSeries> {
        eta_quotient(&EtaQuotientSpec::etas(pairs), self.order)
    }

    fn product(&self, factors: Vec<Factor>) -> Result<PowerSeries> {
        eta_quotient(&EtaQuotientSpec::new(factors)?, self.order)
    }

    /// `(q^a, q^(b-a); q^b)_∞`, optionally times `(q^b; q^b)_∞`.
    fn pair(&self, a: u32, b: u32, with_full: bool) -> Vec<Factor> {
        let mut v = vec![Factor::new(a, b, 1), Factor::new(b - a, b, 1)];
        if with_full {
            v.push(Factor::eta(b, 1));
        }
        v
    }

    fn p(&self) -> PowerSeries {
        match self.p_form {
            PForm::Lambert => lambert_p(self.order),
            PForm::Cubic => cubic_theta(self.order),
        }
    }

    fn diff_dissected(&self, modulus: Modulus, r: usize, m: usize) -> Result<PowerSeries> {
        diff_series(modulus, m * self.order + r).dissect(r, m)
    }
}

type Side = fn(&Ctx) -> Result<PowerSeries>;

pub struct IdentityCase {
    pub id: &'static str,
    pub kind: IdentityKind,
    pub summary: &'static str,
    /// Whether either side depends on `P(q)`.
    pub uses_p: bool,
    lhs: Side,
    /// Right side for equalities.
    rhs: Option<Side>,
    /// Further series that must satisfy the kind's predicate (sub-steps of a
    /// positivity argument).
    parts: &'static [(&'static str, IdentityKind, Side)],
}

impl IdentityCase {
    pub fn lhs(&self, order: usize, p_form: PForm) -> Result<PowerSeries> {
        (self.lhs)(&Ctx { order, p_form })
    }

    pub fn rhs(&self, order: usize, p_form: PForm) -> Result<Option<PowerSeries>> {
        self.rhs.map(|f| f(&Ctx { order, p_form })).transpose()
    }
}

impl std::fmt::Debug for IdentityCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityCase")
            .field("id", &self.id)
            .field("kind", &self.kind)
            .finish()
    }
}

fn f1_lhs(c: &Ctx) -> Result<PowerSeries> {
    c.etas(&[(1, 1)])
}

fn f1_rhs(c: &Ctx) -> Result<PowerSeries> {
    let a = c.product(c.pair(12, 27, true))?;
    let b = c.product(c.pair(6, 27, true))?.shift(1);
    let d = c.product(c.pair(3, 27, true))?.shift(2);
    Ok(&(&a - &b) - &d)
}

fn f1_cubed(c: &Ctx) -> Result<PowerSeries> {
    c.etas(&[(1, 3)])
}

fn f1_cubed_rhs(c: &Ctx) -> Result<PowerSeries> {
    let p3 = c.p().compose_power(3)?;
    Ok(&p3 - &c.etas(&[(9, 3)])?.shift(1).scale(3))
}

fn p_lambert(c: &Ctx) -> Result<PowerSeries> {
    Ok(lambert_p(c.order))
}

fn p_cubic(c: &Ctx) -> Result<PowerSeries> {
    Ok(cubic_theta(c.order))
}

fn f1_fourth(c: &Ctx) -> Result<PowerSeries> {
    c.etas(&[(1, 4)])
}

fn entry25_rhs(c: &Ctx) -> Result<PowerSeries> {
    let a = c.etas(&[(4, 10), (2, -2), (8, -4)])?;
    let b = c.etas(&[(2, 2), (8, 4), (4, -2)])?.shift(1).scale(4);
    Ok(&a - &b)
}

fn inv_f1(c: &Ctx) -> Result<PowerSeries> {
    c.etas(&[(1, -1)])
}

fn two_dissect_rhs(c: &Ctx) -> Result<PowerSeries> {
    let pre = c.etas(&[(16, 1), (2, -2)])?;
    let even = c.product(vec![Factor::negated(6, 16, 1), Factor::negated(10, 16, 1)])?;
    let odd = c.product(vec![Factor::negated(2, 16, 1), Factor::negated(14, 16, 1)])?;
    Ok(pre.mul_series(&(&even + &odd.shift(1))))
}

fn d3_part0(c: &Ctx) -> Result<PowerSeries> {
    c.diff_dissected(Modulus::Three, 0, 3)
}

fn d3_part1(c: &Ctx) -> Result<PowerSeries> {
    c.diff_dissected(Modulus::Three, 1, 3)
}

fn d3_part2(c: &Ctx) -> Result<PowerSeries> {
    c.diff_dissected(Modulus::Three, 2, 3)
}

fn gf3n_first(c: &Ctx) -> Result<PowerSeries> {
    let j = c.product(c.pair(4, 9, true))?;
    j.mul_series(&c.p()).div_series(&c.etas(&[(1, 2)])?)
}

fn gf3n_second(c: &Ctx) -> Result<PowerSeries> {
    let mut f = c.pair(1, 9, true);
    f.extend([Factor::eta(3, 3), Factor::eta(1, -2)]);
    c.product(f)
}

fn gf3n_rhs(c: &Ctx) -> Result<PowerSeries> {
    Ok(&gf3n_first(c)? + &gf3n_second(c)?.shift(1).scale(3))
}

/// `(q^4,q^5,q^9;q^9) P / f1^2 - sum_{m,n} q^{m^2+mn+n^2} / (1 - q)`.
fn gf3n_chain_first(c: &Ctx) -> Result<PowerSeries> {
    let lower = geometric(c.order).mul_series(&cubic_lattice_sum(c.order));
    Ok(&gf3n_first(c)? - &lower)
}

/// `sum_{m,n} q^{m^2+mn+n^2} / (1 - q) - 1 / (1 - q)`.
fn gf3n_chain_second(c: &Ctx) -> Result<PowerSeries> {
    let g = geometric(c.order);
    Ok(&g.mul_series(&cubic_lattice_sum(c.order)) - &g)
}

fn geometric(order: usize) -> PowerSeries {
    PowerSeries::new(vec![Integer::from(1); order + 1])
}

fn gf3n1_rhs(c: &Ctx) -> Result<PowerSeries> {
    let mut f = c.pair(4, 9, true);
    f.extend([Factor::eta(3, 3), Factor::eta(1, -2)]);
    let a = c.product(f)?.scale(3);
    let b = c.product(c.pair(2, 9, true))?.mul_series(&c.p());
    Ok(-(&a + &b.div_series(&c.etas(&[(1, 2)])?)?))
}

fn gf3n2_rhs(c: &Ctx) -> Result<PowerSeries> {
    let mut f = c.pair(2, 9, false);
    f.extend([Factor::eta(3, 3), Factor::eta(9, 1), Factor::eta(1, -2)]);
    let a = c.product(f)?.scale(3);
    let mut g = c.pair(1, 9, false);
    g.extend([Factor::eta(9, 1), Factor::eta(1, -2)]);
    let b = c.product(g)?.mul_series(&c.p());
    Ok(&a - &b)
}

fn three_core(c: &Ctx) -> Result<PowerSeries> {
    c.etas(&[(3, 3), (1, -1)])
}

fn d4(c: &Ctx) -> Result<PowerSeries> {
    Ok(diff_series(Modulus::Four, c.order))
}

fn add_m4_rhs(c: &Ctx) -> Result<PowerSeries> {
    let a = c.etas(&[(4, 9), (2, -3), (8, -4)])?;
    let b = c.etas(&[(2, 1), (8, 4), (4, -3)])?.shift(1).scale(4);
    Ok(&a - &b)
}

fn d4_even(c: &Ctx) -> Result<PowerSeries> {
    c.diff_dissected(Modulus::Four, 0, 2)
}

fn d4_even_rhs(c: &Ctx) -> Result<PowerSeries> {
    c.etas(&[(2, 9), (1, -3), (4, -4)])
}

fn d4_odd(c: &Ctx) -> Result<PowerSeries> {
    c.diff_dissected(Modulus::Four, 1, 2)
}

fn g_rhs(c: &Ctx) -> Result<PowerSeries> {
    Ok(c.etas(&[(1, 1), (4, 4), (2, -3)])?.scale(-4))
}

fn g_alt(c: &Ctx) -> Result<PowerSeries> {
    Ok(d4_odd(c)?.alternate())
}

/// `-4 (q^4; q^4)_∞^3 / (q; q)_∞`, using `(-q; -q)_∞ = f2^3 / (f1 f4)`.
fn g_alt_rhs(c: &Ctx) -> Result<PowerSeries> {
    Ok(c.etas(&[(4, 3), (1, -1)])?.scale(-4))
}

fn gauss_lhs(c: &Ctx) -> Result<PowerSeries> {
    Ok(gauss_theta(c.order))
}

fn gauss_rhs(c: &Ctx) -> Result<PowerSeries> {
    c.etas(&[(4, 2), (2, -1)])
}

fn d4_quarter(c: &Ctx, r: usize) -> Result<PowerSeries> {
    Ok(c.diff_dissected(Modulus::Four, r, 4)?.alternate())
}

fn gf4n_lhs(c: &Ctx) -> Result<PowerSeries> {
    d4_quarter(c, 0)
}

fn gf4n2_lhs(c: &Ctx) -> Result<PowerSeries> {
    d4_quarter(c, 2)
}

fn gf4_pieces(c: &Ctx) -> Result<(PowerSeries, PowerSeries, PowerSeries)> {
    let pre = c.etas(&[(2, 2), (8, 1), (1, -2), (4, -2)])?;
    let mut a = c.pair(3, 8, false);
    a.extend([Factor::eta(4, 5), Factor::eta(8, -2)]);
    let mut b = c.pair(3, 8, false);
    b.extend([Factor::eta(2, 2), Factor::eta(8, 2), Factor::eta(4, -1)]);
    let mut x = c.pair(1, 8, false);
    x.extend([Factor::eta(2, 2), Factor::eta(8, 2), Factor::eta(4, -1)]);
    let mut y = c.pair(1, 8, false);
    y.extend([Factor::eta(4, 5), Factor::eta(8, -2)]);
    let (a, b, x, y) = (c.product(a)?, c.product(b)?, c.product(x)?, c.product(y)?);
    // (pre, even-case bracket, odd-case bracket)
    Ok((pre, &a - &x.shift(1).scale(2), &b.scale(2) + &y))
}

fn gf4n_rhs(c: &Ctx) -> Result<PowerSeries> {
    let (pre, even, _) = gf4_pieces(c)?;
    Ok(pre.mul_series(&even))
}

fn gf4n2_rhs(c: &Ctx) -> Result<PowerSeries> {
    let (pre, _, odd) = gf4_pieces(c)?;
    Ok(pre.mul_series(&odd))
}

const fn equality(
    id: &'static str,
    summary: &'static str,
    uses_p: bool,
    lhs: Side,
    rhs: Side,
) -> IdentityCase {
    IdentityCase {
        id,
        kind: IdentityKind::Equality,
        summary,
        uses_p,
        lhs,
        rhs: Some(rhs),
        parts: &[],
    }
}

const fn signed(
    id: &'static str,
    summary: &'static str,
    kind: IdentityKind,
    series: Side,
) -> IdentityCase {
    IdentityCase {
        id,
        kind,
        summary,
        uses_p: false,
        lhs: series,
        rhs: None,
        parts: &[],
    }
}

static CATALOG: &[IdentityCase] = &[
    equality(
        "f1-3dissect",
        "3-dissection of (q;q)",
        false,
        f1_lhs,
        f1_rhs,
    ),
    equality(
        "f3-3dissect",
        "(q;q)^3 = P(q^3) - 3q (q^9;q^9)^3",
        true,
        f1_cubed,
        f1_cubed_rhs,
    ),
    equality(
        "P-two-forms",
        "Lambert and cubic-theta forms of P(q)",
        false,
        p_lambert,
        p_cubic,
    ),
    equality(
        "entry25",
        "2-dissection of (q;q)^4",
        false,
        f1_fourth,
        entry25_rhs,
    ),
    equality(
        "two-dissect",
        "2-dissection of 1/(q;q)",
        false,
        inv_f1,
        two_dissect_rhs,
    ),
    equality("gf-3n", "mod-3 difference at 3n", true, d3_part0, gf3n_rhs),
    equality(
        "gf-3n1",
        "mod-3 difference at 3n+1",
        true,
        d3_part1,
        gf3n1_rhs,
    ),
    equality(
        "gf-3n2",
        "mod-3 difference at 3n+2",
        true,
        d3_part2,
        gf3n2_rhs,
    ),
    equality(
        "add-M4",
        "split of the mod-4 difference",
        false,
        d4,
        add_m4_rhs,
    ),
    equality(
        "add-M04-2n",
        "mod-4 difference at 2n",
        false,
        d4_even,
        d4_even_rhs,
    ),
    equality("g-odd", "mod-4 difference at 2n+1", false, d4_odd, g_rhs),
    equality(
        "g-alt",
        "g(-q) = -4 (q^4;q^4)^3/(q;q)",
        false,
        g_alt,
        g_alt_rhs,
    ),
    equality(
        "gauss-theta",
        "sum q^{m(m+1)} = (q^4;q^4)^2/(q^2;q^2)",
        false,
        gauss_lhs,
        gauss_rhs,
    ),
    equality(
        "gf-4n",
        "mod-4 difference at 4n, q -> -q",
        false,
        gf4n_lhs,
        gf4n_rhs,
    ),
    equality(
        "gf-4n2",
        "mod-4 difference at 4n+2, q -> -q",
        false,
        gf4n2_lhs,
        gf4n2_rhs,
    ),
    signed(
        "3core-nonneg",
        "3-core partition counts",
        IdentityKind::AllNonnegative,
        three_core,
    ),
    IdentityCase {
        id: "gf3n-positive",
        kind: IdentityKind::AllPositive,
        summary: "mod-3 difference at 3n is positive",
        uses_p: true,
        lhs: d3_part0,
        rhs: None,
        parts: &[
            (
                "cubic-over-geometric",
                IdentityKind::AllNonnegative,
                gf3n_chain_first,
            ),
            (
                "lattice-dominates-one",
                IdentityKind::AllNonnegative,
                gf3n_chain_second,
            ),
            ("second-summand", IdentityKind::AllNonnegative, gf3n_second),
        ],
    },
    signed(
        "gf3n1-negative",
        "mod-3 difference at 3n+1 is negative",
        IdentityKind::AllNegative,
        d3_part1,
    ),
    signed(
        "g-neg",
        "g(-q) has negative coefficients",
        IdentityKind::AllNegative,
        g_alt,
    ),
    signed(
        "sign-4n",
        "mod-4 difference at 4n, q -> -q",
        IdentityKind::SignPattern,
        gf4n_lhs,
    ),
    signed(
        "sign-4n2",
        "mod-4 difference at 4n+2, q -> -q",
        IdentityKind::SignPattern,
        gf4n2_lhs,
    ),
];

pub fn catalog() -> &'static [IdentityCase] {
    CATALOG
}

pub fn lookup(id: &str) -> Result<&'static IdentityCase> {
    CATALOG
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

pub fn equality_ids() -> impl Iterator<Item = &'static str> {
    CATALOG
        .iter()
        .filter(|c| c.kind == IdentityKind::Equality)
        .map(|c| c.id)
}

pub fn sign_ids() -> impl Iterator<Item = &'static str> {
    CATALOG
        .iter()
        .filter(|c| c.kind != IdentityKind::Equality)
        .map(|c| c.id)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub exponent: usize,
    #[serde(serialize_with = "ser_integer")]
    pub lhs: Integer,
    #[serde(serialize_with = "ser_integer")]
    pub rhs: Integer,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormResult {
    /// `None` when the case does not involve `P(q)`.
    pub p_form: Option<PForm>,
    pub mismatch: Option<Mismatch>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityVerdict {
    pub id: &'static str,
    pub order: usize,
    pub results: Vec<FormResult>,
}

impl IdentityVerdict {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.mismatch.is_none())
    }

    pub fn first_mismatch(&self) -> Option<&Mismatch> {
        self.results.iter().find_map(|r| r.mismatch.as_ref())
    }
}

fn forms(case: &IdentityCase) -> Vec<Option<PForm>> {
    if case.uses_p {
        vec![Some(PForm::Lambert), Some(PForm::Cubic)]
    } else {
        vec![None]
    }
}

/// Expands both sides of an equality to `order` and compares every coefficient.
pub fn verify_identity(id: &str, order: usize) -> Result<IdentityVerdict> {
    let case = lookup(id)?;
    let rhs = case.rhs.ok_or(Error::Domain("an equality identity"))?;
    let mut results = Vec::new();
    for form in forms(case) {
        let ctx = Ctx {
            order,
            p_form: form.unwrap_or(PForm::Lambert),
        };
        let l = (case.lhs)(&ctx)?;
        let r = rhs(&ctx)?;
        let mismatch = l.first_difference(&r).map(|e| Mismatch {
            exponent: e,
            lhs: l.coeff(e).clone(),
            rhs: r.coeff(e).clone(),
        });
        results.push(FormResult {
            p_form: form,
            mismatch,
        });
    }
    Ok(IdentityVerdict {
        id: case.id,
        order,
        results,
    })
}

/// Sign tallies of one series against a predicate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignTally {
    pub label: String,
    pub kind: IdentityKind,
    pub p_form: Option<PForm>,
    pub positive: usize,
    pub zero: usize,
    pub negative: usize,
    /// First exponent violating the predicate.
    pub first_violation: Option<usize>,
}

impl SignTally {
    fn of(label: String, kind: IdentityKind, p_form: Option<PForm>, s: &PowerSeries) -> Self {
        let (mut positive, mut zero, mut negative) = (0, 0, 0);
        for c in s.coeffs() {
            match c.cmp0() {
                std::cmp::Ordering::Greater => positive += 1,
                std::cmp::Ordering::Equal => zero += 1,
                std::cmp::Ordering::Less => negative += 1,
            }
        }
        SignTally {
            label,
            kind,
            p_form,
            positive,
            zero,
            negative,
            first_violation: s.coeffs().iter().position(|c| !kind.admits(c)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PositivityReport {
    pub id: &'static str,
    pub order: usize,
    pub kind: IdentityKind,
    pub tallies: Vec<SignTally>,
}

impl PositivityReport {
    /// `None` for exploratory entries, which are never asserted.
    pub fn verdict(&self) -> Option<bool> {
        if self.kind == IdentityKind::SignPattern {
            None
        } else {
            Some(self.tallies.iter().all(|t| t.first_violation.is_none()))
        }
    }
}

/// Checks a sign predicate coefficient by coefficient to `order`.
pub fn positivity_report(id: &str, order: usize) -> Result<PositivityReport> {
    let case = lookup(id)?;
    if case.kind == IdentityKind::Equality {
        return Err(Error::Domain("a sign identity"));
    }
    let ctx = Ctx {
        order,
        p_form: PForm::Lambert,
    };
    let mut tallies = vec![SignTally::of(
        case.id.to_string(),
        case.kind,
        None,
        &(case.lhs)(&ctx)?,
    )];
    for &(label, kind, side) in case.parts {
        for form in [PForm::Lambert, PForm::Cubic] {
            let s = side(&Ctx {
                order,
                p_form: form,
            })?;
            tallies.push(SignTally::of(
                format!("{}/{}", case.id, label),
                kind,
                Some(form),
                &s,
            ));
        }
    }
    Ok(PositivityReport {
        id: case.id,
        order,
        kind: case.kind,
        tallies,
    })
}

/// Verdict for one catalog entry, equality or sign.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum CatalogResult {
    Identity(IdentityVerdict),
    Sign(PositivityReport),
}

impl CatalogResult {
    pub fn id(&self) -> &'static str {
        match self {
            CatalogResult::Identity(v) => v.id,
            CatalogResult::Sign(r) => r.id,
        }
    }

    /// `None` when the entry is exploratory.
    pub fn passed(&self) -> Option<bool> {
        match self {
            CatalogResult::Identity(v) => Some(v.passed()),
            CatalogResult::Sign(r) => r.verdict(),
        }
    }
}

/// Runs every catalog entry at `order`, in parallel, reporting in catalog order.
pub fn verify_catalog(order: usize) -> Result<Vec<CatalogResult>> {
    CATALOG
        .par_iter()
        .map(|case| {
            if case.kind == IdentityKind::Equality {
                verify_identity(case.id, order).map(CatalogResult::Identity)
            } else {
                positivity_report(case.id, order).map(CatalogResult::Sign)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_equality_holds_at_small_order() {
        for id in equality_ids() {
            let v = verify_identity(id, 60).unwrap();
            assert!(v.passed(), "{id}: {:?}", v.first_mismatch());
        }
    }

    #[test]
    fn constant_terms_at_order_zero() {
        let v = verify_identity("f1-3dissect", 0).unwrap();
        assert!(v.passed());
    }

    #[test]
    fn p_cases_run_both_forms() {
        let v = verify_identity("gf-3n", 20).unwrap();
        assert_eq!(v.results.len(), 2);
        let v = verify_identity("entry25", 20).unwrap();
        assert_eq!(v.results.len(), 1);
    }

    #[test]
    fn unknown_id_is_an_error() {
        assert!(matches!(
            verify_identity("nope", 5),
            Err(Error::UnknownIdentity(_))
        ));
        assert!(positivity_report("nope", 5).is_err());
        assert!(positivity_report("entry25", 5).is_err());
        assert!(verify_identity("g-neg", 5).is_err());
    }

    #[test]
    fn g_alt_constant_term() {
        let s = lookup("g-neg").unwrap().lhs(10, PForm::Lambert).unwrap();
        assert_eq!(*s.coeff(0), -4);
        assert_eq!(*s.coeff(1), -4);
        assert_eq!(*s.coeff(2), -8);
    }

    #[test]
    fn sign_entries() {
        for id in sign_ids() {
            let r = positivity_report(id, 80).unwrap();
            match r.kind {
                IdentityKind::SignPattern => assert_eq!(r.verdict(), None),
                _ => assert_eq!(r.verdict(), Some(true), "{id}: {:?}", r.tallies),
            }
        }
        let r = positivity_report("gf3n-positive", 40).unwrap();
        assert_eq!(r.tallies.len(), 7);
    }

    #[test]
    fn squared_theta_form_is_not_g_alt() {
        // -4 (sum q^{m(m+1)})^2 / (q; q^2)_∞ = -4 f4^4 / (f1 f2) agrees with
        // g(-q) only through q^1.
        let ctx = Ctx {
            order: 30,
            p_form: PForm::Lambert,
        };
        let t = gauss_theta(30);
        let odd = ctx.product(vec![Factor::new(1, 2, 1)]).unwrap();
        let squared = t.mul_series(&t).div_series(&odd).unwrap().scale(-4);
        assert_eq!(
            squared,
            ctx.etas(&[(4, 4), (1, -1), (2, -1)]).unwrap().scale(-4)
        );
        let g = g_alt(&ctx).unwrap();
        assert_eq!(g.first_difference(&squared), Some(2));
    }

    #[test]
    fn a_broken_side_reports_the_mismatch() {
        let ctx = Ctx {
            order: 10,
            p_form: PForm::Lambert,
        };
        let l = f1_lhs(&ctx).unwrap();
        let r = f1_cubed(&ctx).unwrap();
        assert_eq!(l.first_difference(&r), Some(1));
    }
}
