use std::fmt::Write as _;

use anyhow::{bail, Context, Result};
use liecohom::cartan::{classify_k, compact_dual, verify_cartan_involution, CartanDecomposition, KClass};
use liecohom::catalog::{
    build, list, su2_embedding, sun_block_embedding, CartanType, CatalogEntry, Family, Homomorphism,
};
use liecohom::cocycle::{build_omega, dynkin_index, DynkinIndexResult};
use liecohom::cohomology::{cohomology_dims, AlternatingForm, CohomologyReport, ReductivePair};
use liecohom::geodesic::{simplex_suite, SimplexReport};
use liecohom::lie::{
    centroid, complex_structure, killing_signature, structure_analysis, AlgebraJson, ComplexStructure, LieAlgebra,
    StructureKind, SubalgebraEmbedding,
};
use liecohom::linalg::Matrix;
use serde::Serialize;

use crate::verify::{verify_theorem_a, verify_theorem_b};
use crate::{Relative, Source};

pub struct Output {
    pub json: bool,
}

impl Output {
    fn emit<T: Serialize>(&self, value: &T, table: impl FnOnce() -> String) -> Result<()> {
        if self.json {
            // Value maps are ordered, so keys come out sorted
            let v = serde_json::to_value(value)?;
            println!("{}", serde_json::to_string_pretty(&v)?);
        } else {
            print!("{}", table());
        }
        Ok(())
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn load(source: &Source, max_dim: usize) -> Result<(LieAlgebra, Option<CatalogEntry>)> {
    match (&source.name, &source.file) {
        (Some(name), None) => {
            let e = build(name, max_dim)?;
            Ok((e.algebra.clone(), Some(e)))
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            // accept the output of `catalog export` as well as a bare algebra
            let text = match serde_json::from_str::<serde_json::Value>(&text) {
                Ok(serde_json::Value::Object(mut map)) if map.contains_key("algebra") => {
                    map["algebra"].take().to_string()
                }
                _ => text,
            };
            let g = LieAlgebra::from_json_str(&text).with_context(|| format!("parsing {}", path.display()))?;
            Ok((g, None))
        }
        _ => bail!("give a catalog name or --file PATH"),
    }
}

fn decomposition(entry: Option<&CatalogEntry>) -> Result<CartanDecomposition> {
    let e = entry.context("a Cartan involution is only known for catalog entries")?;
    Ok(verify_cartan_involution(&e.algebra, &e.cartan_involution)?)
}

pub fn catalog_list(out: &Output, max_dim: usize) -> Result<bool> {
    let entries = list(max_dim);
    out.emit(&entries, || {
        let mut s = format!("{:<8} {:<6} {:>4}  complex\n", "name", "family", "dim");
        for e in &entries {
            let _ = writeln!(
                s,
                "{:<8} {:<6} {:>4}  {}",
                e.name,
                e.family.as_str(),
                e.dim,
                yes_no(e.expects_complex_structure)
            );
        }
        s
    })?;
    Ok(true)
}

#[derive(Serialize)]
struct ExportedEntry {
    name: String,
    family: Family,
    cartan_type: Option<CartanType>,
    expects_complex_structure: bool,
    algebra: AlgebraJson,
    cartan_involution: Matrix,
}

pub fn catalog_export(name: &str, max_dim: usize) -> Result<bool> {
    let e = build(name, max_dim)?;
    let x = ExportedEntry {
        name: e.name.clone(),
        family: e.family,
        cartan_type: e.cartan_type,
        expects_complex_structure: e.expects_complex_structure,
        algebra: e.algebra.to_json(),
        cartan_involution: e.cartan_involution.clone(),
    };
    Output { json: true }.emit(&x, String::new)?;
    Ok(true)
}

#[derive(Serialize)]
struct CartanSummary {
    k_dim: usize,
    p_dim: usize,
    z_k_dim: usize,
    k_class: Option<KClass>,
    compact_dual_signature: [usize; 3],
}

#[derive(Serialize)]
struct AnalyzeReport {
    name: String,
    dim: usize,
    killing_signature: [usize; 3],
    structure: StructureKind,
    centroid_dim: usize,
    complex_structure: &'static str,
    cartan: Option<CartanSummary>,
}

fn signature(g: &LieAlgebra) -> [usize; 3] {
    let (p, n, z) = killing_signature(g).as_tuple();
    [p, n, z]
}

pub fn analyze(out: &Output, source: &Source, max_dim: usize) -> Result<bool> {
    let (g, entry) = load(source, max_dim)?;
    let structure = structure_analysis(&g)?;
    let cs = match complex_structure(&g) {
        Ok(Some(ComplexStructure::Rational(_))) => "rational",
        Ok(Some(ComplexStructure::Certificate { .. })) => "certificate",
        Ok(None) => "none",
        Err(_) => "not_simple",
    };
    let cartan = match entry {
        Some(_) => {
            let d = decomposition(entry.as_ref())?;
            let dual = compact_dual(&d)?;
            Some(CartanSummary {
                k_dim: d.k_dim(),
                p_dim: d.p_dim(),
                z_k_dim: d.z_k_dim,
                k_class: classify_k(&d).ok(),
                compact_dual_signature: signature(&dual.algebra),
            })
        }
        None => None,
    };
    let r = AnalyzeReport {
        name: g.name().to_string(),
        dim: g.dim(),
        killing_signature: signature(&g),
        structure,
        centroid_dim: centroid(&g).dim(),
        complex_structure: cs,
        cartan,
    };
    out.emit(&r, || {
        let mut s = String::new();
        let _ = writeln!(s, "algebra            {} (dim {})", r.name, r.dim);
        let _ = writeln!(s, "killing signature  {:?}", r.killing_signature);
        let _ = writeln!(s, "structure          {:?}", r.structure);
        let _ = writeln!(s, "centroid dim       {}", r.centroid_dim);
        let _ = writeln!(s, "complex structure  {}", r.complex_structure);
        if let Some(c) = &r.cartan {
            let _ = writeln!(s, "k, p               {}, {}", c.k_dim, c.p_dim);
            let _ = writeln!(s, "center of k        {}", c.z_k_dim);
            if let Some(k) = &c.k_class {
                let _ = writeln!(s, "k class            {k:?}");
            }
            let _ = writeln!(s, "compact dual sig.  {:?}", c.compact_dual_signature);
        }
        s
    })?;
    Ok(true)
}

#[derive(Serialize)]
struct CohomologyOutput {
    relative: &'static str,
    h_dims: Vec<usize>,
    #[serde(flatten)]
    report: CohomologyReport,
}

pub fn cohomology(
    out: &Output,
    source: &Source,
    relative: Relative,
    max_degree: usize,
    max_dim: usize,
) -> Result<bool> {
    let (g, entry) = load(source, max_dim)?;
    let (label, pair) = match relative {
        Relative::None => ("none", ReductivePair::absolute(&g)?),
        Relative::K => ("k", ReductivePair::symmetric(&decomposition(entry.as_ref())?)),
        Relative::M => {
            let d = decomposition(entry.as_ref())?;
            ("m", ReductivePair::orthogonal_complement(&g, d.m_basis.clone(), "m")?)
        }
    };
    let report = cohomology_dims(&pair, max_degree)?;
    let r = CohomologyOutput {
        relative: label,
        h_dims: report.h_dims(),
        report,
    };
    out.emit(&r, || {
        let p = &r.report.pair;
        let mut s = format!(
            "H^k({}, {})  dim g {}, dim m {}, dim p {}{}\n",
            p.g,
            p.m,
            p.g_dim,
            p.m_dim,
            p.p_dim,
            if r.report.symmetric_pair { ", symmetric" } else { "" }
        );
        let _ = writeln!(s, "{:>3} {:>10} {:>8} {:>6}", "k", "invariant", "rank d", "H^k");
        for d in &r.report.degrees {
            let _ = writeln!(s, "{:>3} {:>10} {:>8} {:>6}", d.k, d.invariant_dim, d.d_rank, d.h_dim);
        }
        s
    })?;
    Ok(true)
}

#[derive(Serialize)]
struct OmegaOutput {
    algebra: String,
    k_dim: usize,
    invariant_dim: usize,
    nonzero_coefficients: usize,
    form: AlternatingForm,
}

pub fn omega(out: &Output, name: &str, max_dim: usize) -> Result<bool> {
    let e = build(name, max_dim)?;
    let j = match complex_structure(&e.algebra)? {
        Some(ComplexStructure::Rational(j)) => j,
        Some(ComplexStructure::Certificate { .. }) => bail!("{name} has no rational complex structure"),
        None => bail!("{name} has no complex structure"),
    };
    let d = verify_cartan_involution(&e.algebra, &e.cartan_involution)?;
    let labels = (0..d.k_dim()).map(|i| format!("k{}", i + 1)).collect();
    let k = SubalgebraEmbedding::from_basis(&e.algebra, "k", &d.k_basis, labels)?;
    let w = build_omega(&e.algebra, &j, &k)?;
    let r = OmegaOutput {
        algebra: w.algebra.clone(),
        k_dim: w.k_dim,
        invariant_dim: w.invariant_dim,
        nonzero_coefficients: w.form.coefficients.len(),
        form: w.form,
    };
    out.emit(&r, || {
        let mut s = format!(
            "omega on {}: dim p {}, {} nonzero coefficients, invariant space dim {}\n",
            r.algebra, r.k_dim, r.nonzero_coefficients, r.invariant_dim
        );
        for (t, c) in r.form.coefficients.iter().take(12) {
            let _ = writeln!(s, "  {t:?}  {c}");
        }
        if r.nonzero_coefficients > 12 {
            s.push_str("  ...\n");
        }
        s
    })?;
    Ok(r.invariant_dim == 1)
}

#[derive(Serialize)]
struct DynkinOutput {
    source: String,
    target: String,
    #[serde(flatten)]
    result: DynkinIndexResult,
}

pub fn dynkin(
    out: &Output,
    target: &str,
    weights: Option<&[i64]>,
    source: Option<&str>,
    max_dim: usize,
) -> Result<bool> {
    let t = build(target, max_dim)?;
    let h: Homomorphism = match (weights, source) {
        (Some(w), _) => su2_embedding(&t, w)?,
        (None, Some(s)) if s != target => sun_block_embedding(&build(s, max_dim)?, &t)?,
        _ => Homomorphism::identity(&t),
    };
    let r = DynkinOutput {
        source: h.source.name().to_string(),
        target: h.target.name().to_string(),
        result: dynkin_index(&h)?,
    };
    out.emit(&r, || {
        format!(
            "{} -> {}: Killing ratio {}, dual Coxeter {} / {}, index {}\n",
            r.source,
            r.target,
            r.result.raw_killing_ratio,
            r.result.dual_coxeter_source,
            r.result.dual_coxeter_target,
            r.result.index
        )
    })?;
    Ok(true)
}

pub const DEFECT_TOL: f64 = 1e-6;
pub const INVARIANCE_TOL: f64 = 1e-8;
pub const DEGENERATE_TOL: f64 = 1e-10;
pub const NONTRIVIAL_MIN: f64 = 0.1;

#[derive(Serialize)]
struct SimplexOutput {
    #[serde(flatten)]
    report: SimplexReport,
    defect_checked: bool,
    passes: bool,
}

pub fn simplex(out: &Output, order: usize, seed: u64, tuples: usize, defect: bool) -> Result<bool> {
    let report = simplex_suite(seed, tuples, order, 1.0)?;
    let passes = report.max_invariance_residual < INVARIANCE_TOL
        && report.degenerate_value < DEGENERATE_TOL
        && report.max_abs_value > NONTRIVIAL_MIN
        && (!defect || report.max_defect < DEFECT_TOL);
    let r = SimplexOutput {
        report,
        defect_checked: defect,
        passes,
    };
    out.emit(&r, || {
        let p = &r.report;
        let mut s = format!(
            "H^3 hyperboloid, order {}, seed {}, {} tuples\n",
            p.order, p.seed, p.tuples
        );
        let _ = writeln!(s, "omega / volume form     {}", p.omega_scale);
        let _ = writeln!(s, "first value             {:.12e}", p.first_value);
        let _ = writeln!(s, "largest |I|             {:.12e}", p.max_abs_value);
        let _ = writeln!(s, "invariance residual     {:.3e}", p.max_invariance_residual);
        let _ = writeln!(s, "degenerate value        {:.3e}", p.degenerate_value);
        if r.defect_checked {
            let _ = writeln!(s, "defect                  {:.3e}", p.max_defect);
        }
        let _ = writeln!(s, "passes                  {}", yes_no(r.passes));
        s
    })?;
    Ok(passes)
}

pub fn theorem_a(out: &Output, max_dim: usize) -> Result<bool> {
    let r = verify_theorem_a(max_dim)?;
    out.emit(&r, || {
        let mut s = format!(
            "{:<6} {:>4} {:>8} {:>3} {:>3} {:>4} {:>9} {:>11}\n",
            "name", "dim", "complex", "H3", "H2", "z(k)", "hermitian", "consistent"
        );
        for row in &r.rows {
            let _ = writeln!(
                s,
                "{:<6} {:>4} {:>8} {:>3} {:>3} {:>4} {:>9} {:>11}",
                row.name,
                row.dim,
                yes_no(row.has_complex_structure),
                row.h3_dim,
                row.h2_dim,
                row.z_k_dim,
                yes_no(row.hermitian),
                yes_no(row.consistent && row.h2_consistent)
            );
        }
        let _ = writeln!(s, "verdict: {}", if r.verdict { "pass" } else { "FAIL" });
        s
    })?;
    Ok(r.verdict)
}

pub fn theorem_b(out: &Output) -> Result<bool> {
    let r = verify_theorem_b()?;
    out.emit(&r, || {
        let c = &r.case1;
        let mut s = format!(
            "case 1: {} has abelian k; compact dual dim {} (simple: {}), H^3 = {}\n",
            c.algebra,
            c.compact_dual_dim,
            yes_no(c.compact_dual_simple),
            c.compact_dual_h3
        );
        let _ = writeln!(
            s,
            "case 2: {:<6} {:>4}  {:<26} {:>8} {:>9}",
            "name", "z(k)", "m", "H3(g,m)", "H3(gu,m)"
        );
        for row in &r.case2 {
            let _ = writeln!(
                s,
                "        {:<6} {:>4}  {:<26} {:>8} {:>9}",
                row.name, row.z_k_dim, row.m_description, row.h3_g_m, row.h3_gu_m
            );
        }
        let _ = writeln!(s, "verdict: {}", if r.verdict { "pass" } else { "FAIL" });
        s
    })?;
    Ok(r.verdict)
}
