//! Generation checks: do `Z`-multiples of the named cocycles fill out
//! `Ext^i(k, S^n)`, and in which degrees does a minimal generating set live.

use std::collections::BTreeMap;

use serde::Serialize;

use super::cocycles::{build_cocycle, CocycleName};
use super::predict::{predicted_dim, DimFamily};
use crate::cohomology::ExtEngine;
use crate::complex::Cochain;
use crate::error::{Error, Result};
use crate::field::Prime;
use crate::linalg::span_rank;
use crate::sl2::{casimir, invariant_monomials, InvariantMonomial, InvariantRing, ModuleSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanRow {
    pub n: u32,
    pub ext_dim: usize,
    pub span_dim: usize,
}

impl SpanRow {
    pub fn spans(&self) -> bool {
        self.ext_dim == self.span_dim
    }
}

/// Groups cochains by weight and returns the total rank of their classes.
fn class_rank(engine: &ExtEngine, cochains: &[Cochain]) -> Result<usize> {
    let mut by_weight: BTreeMap<(ModuleSpec, i64), Vec<Vec<u32>>> = BTreeMap::new();
    for a in cochains {
        by_weight
            .entry((a.module(), a.weight()))
            .or_default()
            .push(engine.class_coordinates(a)?);
    }
    let p = engine.prime();
    let mut total = 0;
    for ((module, w), coords) in by_weight {
        let i = cochains[0].ext_degree();
        let dim = engine.ext_dim_at_weight(i, module, w)?;
        total += span_rank(p, dim, &coords);
    }
    Ok(total)
}

/// One row per degree `n <= bound`: dimension of `Ext^i(k, S^n)` against
/// the dimension spanned by `z * A` over the named degree-`i` cocycles `A`.
pub fn span_check(engine: &ExtEngine, i: usize, bound: u32) -> Result<Vec<SpanRow>> {
    if !(1..=3).contains(&i) {
        return Err(Error::InvalidArgument(format!(
            "span check needs i in 1..=3, got {i}"
        )));
    }
    let p = engine.prime();
    let gens: Vec<(CocycleName, Cochain)> = CocycleName::generators(i)
        .into_iter()
        .map(|g| Ok((g, build_cocycle(g, p)?)))
        .collect::<Result<_>>()?;
    (0..=bound).map(|n| span_row(engine, i, n, &gens)).collect()
}

fn span_row(
    engine: &ExtEngine,
    i: usize,
    n: u32,
    gens: &[(CocycleName, Cochain)],
) -> Result<SpanRow> {
    let p = engine.prime();
    let ext_dim = engine.ext_dim(i, ModuleSpec::SymAdjoint(n))?;
    let mut products = Vec::new();
    for (name, a) in gens {
        let d = name.poly_degree(p);
        if d > n {
            continue;
        }
        for z in invariant_monomials(InvariantRing::Z, n - d, p) {
            let za = a.mul_poly(&z.to_poly(p))?;
            if !za.is_zero() {
                products.push(za);
            }
        }
    }
    let span_dim = if products.is_empty() {
        0
    } else {
        class_rank(engine, &products)?
    };
    Ok(SpanRow {
        n,
        ext_dim,
        span_dim,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum HhGroup {
    HH1,
    HH2,
    HH3,
}

impl HhGroup {
    pub const ALL: [HhGroup; 3] = [HhGroup::HH1, HhGroup::HH2, HhGroup::HH3];

    pub fn degree(self) -> usize {
        match self {
            HhGroup::HH1 => 1,
            HhGroup::HH2 => 2,
            HhGroup::HH3 => 3,
        }
    }

    pub fn id(self) -> &'static str {
        match self {
            HhGroup::HH1 => "HH1",
            HhGroup::HH2 => "HH2",
            HhGroup::HH3 => "HH3",
        }
    }

    /// The family giving the graded dimension of the presented module.
    pub fn presentation_family(self) -> DimFamily {
        match self {
            HhGroup::HH1 => DimFamily::HilbCnGenerators,
            HhGroup::HH2 => DimFamily::Hh2Hilbert,
            HhGroup::HH3 => DimFamily::Hh3Hilbert,
        }
    }
}

/// Degree `n` part of the module given by generators and relations. For HH1
/// this is the `Z0`-presentation with `c^i E, c^i F, c^i H, c^i C` for
/// `i <= (p-3)/2`, as in the generator list.
pub fn presentation_hilbert(group: HhGroup, n: u32, p: Prime) -> i64 {
    predicted_dim(group.presentation_family(), n, p)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeAudit {
    pub group: HhGroup,
    /// Polynomial degree -> number of minimal generators found there.
    pub found: BTreeMap<u32, usize>,
    /// Polynomial degree -> number claimed.
    pub claimed: BTreeMap<u32, usize>,
    /// Degrees of the named cocycles for this group.
    pub catalog: BTreeMap<u32, usize>,
}

impl DegreeAudit {
    pub fn matches_claim(&self) -> bool {
        self.found == self.claimed
    }
}

/// Number of classes in `Ext^i(k, S^n)` not reached from lower degrees by
/// multiplication with `c, e^p, h^p, f^p`.
pub fn indecomposable_count(engine: &ExtEngine, i: usize, n: u32) -> Result<usize> {
    let p = engine.prime();
    let total = engine.ext_dim(i, ModuleSpec::SymAdjoint(n))?;
    if total == 0 {
        return Ok(0);
    }
    let pp = p.get();
    let gens = [
        (2, casimir(p)),
        (pp, InvariantMonomial::new(0, 1, 0, 0).to_poly(p)),
        (pp, InvariantMonomial::new(0, 0, 1, 0).to_poly(p)),
        (pp, InvariantMonomial::new(0, 0, 0, 1).to_poly(p)),
    ];
    let mut products = Vec::new();
    for (d, g) in &gens {
        if *d > n {
            continue;
        }
        let src = ModuleSpec::SymAdjoint(n - d);
        for w in ExtEngine::weights(src, i) {
            for class in engine.cohomology_basis(src, i, w)? {
                let prod = class.representative.mul_poly(g)?;
                if !prod.is_zero() {
                    products.push(prod);
                }
            }
        }
    }
    let reached = if products.is_empty() {
        0
    } else {
        class_rank(engine, &products)?
    };
    Ok(total - reached)
}

pub fn theorem_degree_audit(engine: &ExtEngine, bound: u32) -> Result<Vec<DegreeAudit>> {
    let p = engine.prime();
    let pp = p.get();
    let mut out = Vec::new();
    for group in HhGroup::ALL {
        let i = group.degree();
        let mut found = BTreeMap::new();
        for n in 0..=bound {
            let k = indecomposable_count(engine, i, n)?;
            if k > 0 {
                found.insert(n, k);
            }
        }
        let claimed: BTreeMap<u32, usize> = match group {
            HhGroup::HH1 => [(pp - 1, 3), (pp, 4)].into(),
            HhGroup::HH2 => [(pp - 1, 3), (pp, 1)].into(),
            HhGroup::HH3 => [(1, 1), (pp - 2, 1)].into(),
        };
        let mut catalog = BTreeMap::new();
        for g in CocycleName::generators(i) {
            *catalog.entry(g.poly_degree(p)).or_insert(0) += 1;
        }
        out.push(DegreeAudit {
            group,
            found,
            claimed,
            catalog,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn hh2_spans_at_three() {
        let engine = ExtEngine::new(p(3));
        for row in span_check(&engine, 2, 12).unwrap() {
            assert!(row.spans(), "{row:?}");
        }
    }

    #[test]
    fn hh3_degree_zero() {
        let engine = ExtEngine::new(p(3));
        let rows = span_check(&engine, 3, 0).unwrap();
        assert_eq!(
            rows,
            vec![SpanRow {
                n: 0,
                ext_dim: 1,
                span_dim: 1
            }]
        );
    }

    #[test]
    fn listed_presentation_values() {
        assert_eq!(presentation_hilbert(HhGroup::HH2, 4, p(5)), 3);
        assert_eq!(presentation_hilbert(HhGroup::HH3, 2, p(5)), 1);
        assert_eq!(presentation_hilbert(HhGroup::HH1, 4, p(5)), 3);
    }

    #[test]
    fn audit_at_five() {
        let engine = ExtEngine::new(p(5));
        let audit = theorem_degree_audit(&engine, 15).unwrap();
        assert!(audit[0].matches_claim(), "{:?}", audit[0]);
        assert!(audit[1].matches_claim(), "{:?}", audit[1]);
        let hh3 = &audit[2];
        assert_eq!(hh3.found, BTreeMap::from([(0, 1), (4, 1)]));
        assert_eq!(hh3.found, hh3.catalog);
        assert!(!hh3.matches_claim());
    }
}
