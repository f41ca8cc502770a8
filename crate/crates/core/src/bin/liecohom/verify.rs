//! Theorem checks. The library computes; expectations live here.

use anyhow::{bail, Context, Result};
use liecohom::cartan::{classify_k, compact_dual, verify_cartan_involution, KClass};
use liecohom::catalog::{build, list, CatalogEntry};
use liecohom::cohomology::{cohomology_dims, ReductivePair};
use liecohom::lie::{complex_structure, structure_analysis, StructureKind};
use liecohom::linalg::{Coordinates, Rational};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct TheoremARow {
    pub name: String,
    pub dim: usize,
    pub has_complex_structure: bool,
    pub expected_complex_structure: bool,
    pub h3_dim: usize,
    pub h2_dim: usize,
    pub z_k_dim: usize,
    pub hermitian: bool,
    pub consistent: bool,
    /// `dim H^2(g, k) = 1` exactly for Hermitian entries.
    pub h2_consistent: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremAReport {
    pub max_dim: usize,
    pub rows: Vec<TheoremARow>,
    pub verdict: bool,
}

fn theorem_a_row(e: &CatalogEntry) -> Result<TheoremARow> {
    let has_j = complex_structure(&e.algebra)?.is_some();
    let d = verify_cartan_involution(&e.algebra, &e.cartan_involution)?;
    let h = cohomology_dims(&ReductivePair::symmetric(&d), 3)?;
    let h3 = h.h(3).unwrap_or(0);
    let h2 = h.h(2).unwrap_or(0);
    let hermitian = d.p_dim() > 0 && d.z_k_dim == 1;
    Ok(TheoremARow {
        name: e.name.clone(),
        dim: e.dim(),
        has_complex_structure: has_j,
        expected_complex_structure: e.expects_complex_structure,
        h3_dim: h3,
        h2_dim: h2,
        z_k_dim: d.z_k_dim,
        hermitian,
        consistent: has_j == (h3 == 1) && h3 <= 1 && has_j == e.expects_complex_structure,
        h2_consistent: h2 == usize::from(hermitian),
    })
}

pub fn verify_theorem_a(max_dim: usize) -> Result<TheoremAReport> {
    let rows = list(max_dim)
        .par_iter()
        .map(|desc| {
            let e = build(&desc.name, max_dim)?;
            theorem_a_row(&e).with_context(|| format!("entry {}", e.name))
        })
        .collect::<Result<Vec<_>>>()?;
    let verdict = rows.iter().all(|r| r.consistent && r.h2_consistent);
    Ok(TheoremAReport { max_dim, rows, verdict })
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseOne {
    pub algebra: String,
    pub k_class: KClass,
    pub compact_dual_dim: usize,
    pub compact_dual_simple: bool,
    pub compact_dual_h3: usize,
    /// Absolute H^3 of g itself, equal to that of the dual.
    pub h3_g: usize,
    pub passes: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseTwoRow {
    pub name: String,
    pub z_k_dim: usize,
    pub m_description: String,
    pub h_g_m: Vec<usize>,
    pub h3_g_m: usize,
    pub h3_gu_m: usize,
    pub passes: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremBReport {
    pub case1: CaseOne,
    pub case2: Vec<CaseTwoRow>,
    pub verdict: bool,
}

pub const CASE_TWO: &[&str] = &["su21", "su31", "su22", "su32", "su33", "so32", "so42", "sp4R", "sp6R"];

fn case_one() -> Result<CaseOne> {
    let e = build("sl2R", 64)?;
    let d = verify_cartan_involution(&e.algebra, &e.cartan_involution)?;
    let k_class = classify_k(&d)?;
    let dual = compact_dual(&d)?;
    let simple = structure_analysis(&dual.algebra)? == StructureKind::SimpleReal;
    let h3_u = cohomology_dims(&ReductivePair::absolute(&dual.algebra)?, 3)?
        .h(3)
        .unwrap_or(0);
    let h3_g = cohomology_dims(&ReductivePair::absolute(&e.algebra)?, 3)?
        .h(3)
        .unwrap_or(0);
    let passes =
        k_class == KClass::KAbelian { p_dim: 2 } && simple && dual.algebra.dim() == 3 && h3_u == 1 && h3_g == h3_u;
    Ok(CaseOne {
        algebra: e.name,
        k_class,
        compact_dual_dim: dual.algebra.dim(),
        compact_dual_simple: simple,
        compact_dual_h3: h3_u,
        h3_g,
        passes,
    })
}

fn case_two_row(name: &str) -> Result<CaseTwoRow> {
    let e = build(name, 64)?;
    let d = verify_cartan_involution(&e.algebra, &e.cartan_involution)?;
    let m_description = match classify_k(&d)? {
        KClass::Hermitian { m_description, .. } => m_description,
        other => bail!("k is not Hermitian: {other:?}"),
    };
    let pair = ReductivePair::orthogonal_complement(&e.algebra, d.m_basis.clone(), "m")?;
    let h = cohomology_dims(&pair, 3)?;

    // m sits inside k, which is the leading block of the dual's basis
    let dual = compact_dual(&d)?;
    let coords = Coordinates::new(&d.k_basis).context("k basis is dependent")?;
    let m_u = d
        .m_basis
        .iter()
        .map(|v| {
            let mut c = coords.coords(v).context("m is not inside k")?;
            c.resize(dual.algebra.dim(), Rational::zero());
            Ok(c)
        })
        .collect::<Result<Vec<_>>>()?;
    let pair_u = ReductivePair::orthogonal_complement(&dual.algebra, m_u, "m")?;
    let h3_u = cohomology_dims(&pair_u, 3)?.h(3).unwrap_or(0);
    let h3 = h.h(3).unwrap_or(0);
    Ok(CaseTwoRow {
        name: e.name,
        z_k_dim: d.z_k_dim,
        m_description,
        h_g_m: h.h_dims(),
        h3_g_m: h3,
        h3_gu_m: h3_u,
        passes: d.z_k_dim == 1 && h3 == 0 && h3_u == 0,
    })
}

pub fn verify_theorem_b() -> Result<TheoremBReport> {
    let case1 = case_one().context("case 1")?;
    let case2 = CASE_TWO
        .par_iter()
        .map(|name| case_two_row(name).with_context(|| format!("entry {name}")))
        .collect::<Result<Vec<_>>>()?;
    let verdict = case1.passes && case2.iter().all(|r| r.passes);
    Ok(TheoremBReport { case1, case2, verdict })
}
