//! Zero-indeterminacy checks for secondary operations on `X(n, k)`, the
//! relation catalog, and the loop-bound scan.
//!
//! For a factorization `Sq^{2n+2} = sum a_i Sq^{t_i}` the indeterminacy in
//! the top degree `4n+2` is `sum_i a_i . H^{2n+t_i}(X(n,k))`; it vanishes
//! exactly when every `a_i` kills every class in degree `2n + t_i`. If the
//! indeterminacy vanishes at `k` the associated operation obstructs the two
//! self-maps being homotopic there, and a homotopy at `k` loops down to all
//! smaller values, so the reported lower bound is one past the largest
//! vanishing `k`.

use std::fmt;

use crate::adem::{adem_normalize_cached, AdemCache, DEFAULT_DEGREE_CAP};
use crate::binom::choose_mod2;
use crate::element::SteenrodElement;
use crate::error::{Error, Result};
use crate::factorization::Factorization;
use crate::projective::make_x;

/// A failing (term, class) pair for a non-vanishing indeterminacy check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub term: SteenrodElement,
    pub t: u32,
    pub class_name: String,
    pub image: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KVerdict {
    pub k: u32,
    pub indeterminacy_zero: bool,
    pub witness: Option<Witness>,
}

/// The per-sphere scan result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub sphere_dim: u32,
    pub relation: String,
    pub verdicts: Vec<KVerdict>,
    pub max_vanishing_k: u32,
    pub lower_bound: u32,
    /// True when the vanishing range is an initial segment of the scan.
    pub contiguous: bool,
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "sphere: S^{}", self.sphere_dim)?;
        writeln!(f, "relation: {}", self.relation)?;
        for v in &self.verdicts {
            if v.indeterminacy_zero {
                writeln!(f, "k={:>2}  indeterminacy zero", v.k)?;
            } else {
                let w = v.witness.as_ref().expect("failing verdict carries a witness");
                writeln!(
                    f,
                    "k={:>2}  indeterminacy nonzero  ({} Sq{} on {} -> {})",
                    v.k,
                    w.term,
                    w.t,
                    w.class_name,
                    w.image.join(" + ")
                )?;
            }
        }
        if !self.contiguous {
            writeln!(f, "warning: vanishing range is not contiguous")?;
        }
        writeln!(f, "max vanishing k: {}", self.max_vanishing_k)?;
        write!(f, "lower bound: k >= {}", self.lower_bound)
    }
}

fn check_range(n: u32, k: u32, f: &Factorization) -> Result<()> {
    if n == 0 || k == 0 || k > 2 * n {
        return Err(Error::InvalidParameter(format!(
            "indeterminacy check needs n >= 1 and 1 <= k <= 2n, got n = {n}, k = {k}"
        )));
    }
    if f.target_degree() != 2 * n + 2 {
        return Err(Error::InvalidParameter(format!(
            "factorization targets Sq{}, expected Sq{}",
            f.target_degree(),
            2 * n + 2
        )));
    }
    Ok(())
}

fn indeterminacy_zero_inner(
    n: u32,
    k: u32,
    f: &Factorization,
    cap: u32,
    cache: &mut AdemCache,
) -> Result<(bool, Option<Witness>)> {
    let module = make_x(n, k)?;
    for (a, t) in f.terms() {
        let normal = adem_normalize_cached(a, cap, cache)?;
        for class in module.classes_in_degree(2 * n + t) {
            let image = module.act(&normal, class);
            if !image.is_empty() {
                debug_assert!(image
                    .iter()
                    .all(|&i| module.classes()[i].degree == 4 * n + 2));
                let witness = Witness {
                    term: a.clone(),
                    t: *t,
                    class_name: module.classes()[class].name.clone(),
                    image: module
                        .class_names(&image)
                        .into_iter()
                        .map(str::to_string)
                        .collect(),
                };
                return Ok((false, Some(witness)));
            }
        }
    }
    Ok((true, None))
}

/// Whether the secondary operation attached to `f` has zero indeterminacy on
/// `X(n, k)`; on failure the first failing (term, class) pair comes back.
pub fn indeterminacy_zero(n: u32, k: u32, f: &Factorization) -> Result<(bool, Option<Witness>)> {
    let mut cache = AdemCache::new();
    check_range(n, k, f)?;
    f.ensure_verified(DEFAULT_DEGREE_CAP, &mut cache)?;
    indeterminacy_zero_inner(n, k, f, DEFAULT_DEGREE_CAP, &mut cache)
}

fn assemble_report(sphere_dim: u32, relation: String, verdicts: Vec<KVerdict>) -> BoundReport {
    let max_vanishing_k = verdicts
        .iter()
        .filter(|v| v.indeterminacy_zero)
        .map(|v| v.k)
        .max()
        .unwrap_or(0);
    let contiguous = verdicts
        .iter()
        .all(|v| v.indeterminacy_zero == (v.k <= max_vanishing_k));
    BoundReport {
        sphere_dim,
        relation,
        verdicts,
        max_vanishing_k,
        lower_bound: max_vanishing_k + 1,
        contiguous,
    }
}

/// Scans `k = 1 ..= 2n` and reports the resulting lower bound.
pub fn lower_bound(n: u32, f: &Factorization) -> Result<BoundReport> {
    lower_bound_with_jobs(n, f, 1)
}

/// As [`lower_bound`], with the per-k verdicts computed on `jobs` threads.
/// The assembled report does not depend on the schedule.
pub fn lower_bound_with_jobs(n: u32, f: &Factorization, jobs: usize) -> Result<BoundReport> {
    if n == 0 {
        return Err(Error::InvalidParameter("lower_bound needs n >= 1".into()));
    }
    f.ensure_verified(DEFAULT_DEGREE_CAP, &mut AdemCache::new())?;
    let ks: Vec<u32> = (1..=2 * n).collect();
    let verdicts: Vec<KVerdict> = if jobs <= 1 {
        let mut cache = AdemCache::new();
        ks.iter()
            .map(|&k| {
                check_range(n, k, f)?;
                let (zero, witness) =
                    indeterminacy_zero_inner(n, k, f, DEFAULT_DEGREE_CAP, &mut cache)?;
                Ok(KVerdict { k, indeterminacy_zero: zero, witness })
            })
            .collect::<Result<_>>()?
    } else {
        let chunk = ks.len().div_ceil(jobs);
        let mut partials: Vec<Vec<Result<KVerdict>>> = Vec::new();
        std::thread::scope(|scope| {
            let handles: Vec<_> = ks
                .chunks(chunk)
                .map(|part| {
                    scope.spawn(move || {
                        let mut cache = AdemCache::new();
                        part.iter()
                            .map(|&k| {
                                check_range(n, k, f)?;
                                let (zero, witness) = indeterminacy_zero_inner(
                                    n,
                                    k,
                                    f,
                                    DEFAULT_DEGREE_CAP,
                                    &mut cache,
                                )?;
                                Ok(KVerdict { k, indeterminacy_zero: zero, witness })
                            })
                            .collect::<Vec<Result<KVerdict>>>()
                    })
                })
                .collect();
            for h in handles {
                partials.push(h.join().expect("scan worker panicked"));
            }
        });
        partials
            .into_iter()
            .flatten()
            .collect::<Result<Vec<KVerdict>>>()?
    };
    Ok(assemble_report(2 * n + 1, f.to_string(), verdicts))
}

/// `Sq^{3 * 2^t} = Sq^{2^t} Sq^{2^{t+1}} + sum over odd C(2^{t+1}-s-1, 2^t-2s)
/// of Sq^{3 * 2^t - s} Sq^s`, `1 <= s <= 2^{t-1}`.
pub fn family_case1(t: u32) -> Result<Factorization> {
    if t == 0 || t > 28 {
        return Err(Error::InvalidParameter(format!("family needs 1 <= t <= 28, got {t}")));
    }
    let p = 1u32 << t;
    let mut terms = vec![(SteenrodElement::sq(p), 2 * p)];
    for s in 1..=p / 2 {
        if choose_mod2((2 * p - s - 1) as u64, (p - 2 * s) as u64) {
            terms.push((SteenrodElement::sq(3 * p - s), s));
        }
    }
    Factorization::new(3 * p, terms)
}

/// `Sq^{2 + 2^{t+1}} = Sq^{2^t} Sq^{2 + 2^t} + sum over odd C(2^t+1-s, 2^t-2s)
/// of Sq^{2 + 2^{t+1} - s} Sq^s`, `1 <= s <= 2^{t-1}`.
pub fn family_case2(t: u32) -> Result<Factorization> {
    if t == 0 || t > 28 {
        return Err(Error::InvalidParameter(format!("family needs 1 <= t <= 28, got {t}")));
    }
    let p = 1u32 << t;
    let target = 2 + 2 * p;
    let mut terms = vec![(SteenrodElement::sq(p), 2 + p)];
    for s in 1..=p / 2 {
        if choose_mod2((p + 1 - s) as u64, (p - 2 * s) as u64) {
            terms.push((SteenrodElement::sq(target - s), s));
        }
    }
    Factorization::new(target, terms)
}

/// A named relation from the catalog together with the sphere it serves.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub sphere_dim: u32,
    pub factorization: Factorization,
}

fn parse(s: &str) -> SteenrodElement {
    s.parse().expect("catalog literals parse")
}

/// The five listed relations, in the order of the table rows
/// (S^5, S^9, S^17, S^11, S^13). The Sq10 and Sq18 rows use the iterated
/// forms whose right factors sit in low degrees.
pub fn catalog() -> Vec<CatalogEntry> {
    let sq10_flat = parse("Sq4 Sq2 Sq4 + Sq4 Sq5 Sq1 + Sq8 Sq2");
    let sq18_flat = parse("Sq8").concat_mul(&sq10_flat)
        + parse("Sq16 Sq2 + Sq15 Sq3 + Sq14 Sq4");
    let entries = [
        ("sq6", 5, parse("Sq2 Sq4 + Sq5 Sq1")),
        ("sq10", 9, sq10_flat),
        ("sq18", 17, sq18_flat),
        ("sq12", 11, parse("Sq4 Sq8 + Sq11 Sq1 + Sq10 Sq2")),
        ("sq14", 13, parse("Sq6 Sq8 + Sq13 Sq1 + Sq11 Sq3")),
    ];
    entries
        .into_iter()
        .map(|(name, sphere_dim, flat)| CatalogEntry {
            name,
            sphere_dim,
            factorization: Factorization::from_element(&flat)
                .expect("catalog relations are well formed"),
        })
        .collect()
}

pub fn catalog_relation(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}

/// The catalog entry whose target is `Sq^{sphere_dim + 1}`, if any.
pub fn catalog_for_sphere(sphere_dim: u32) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.sphere_dim == sphere_dim)
}

/// Table rows: each catalog relation scanned on its own sphere.
pub fn table1(jobs: usize) -> Result<Vec<BoundReport>> {
    catalog()
        .iter()
        .map(|entry| lower_bound_with_jobs((entry.sphere_dim - 1) / 2, &entry.factorization, jobs))
        .collect()
}

#[derive(Debug, Clone)]
pub struct TheoremOneBounds {
    /// Bound for `S^{2^{t+1} + 2^t - 1}` from the first family.
    pub part1: BoundReport,
    /// Bound for `S^{2^{t+1} + 1}` from the second family.
    pub part2: BoundReport,
    /// The required lower bound `2^t + 1` both parts must reach.
    pub required: u32,
}

pub fn theorem_one_bounds(t: u32) -> Result<TheoremOneBounds> {
    theorem_one_bounds_with_jobs(t, 1)
}

pub fn theorem_one_bounds_with_jobs(t: u32, jobs: usize) -> Result<TheoremOneBounds> {
    let n1 = 3 * (1u32 << t) / 2 - 1; // 2n+2 = 3 * 2^t
    let n2 = 1u32 << t; // 2n+2 = 2 + 2^{t+1}
    Ok(TheoremOneBounds {
        part1: lower_bound_with_jobs(n1, &family_case1(t)?, jobs)?,
        part2: lower_bound_with_jobs(n2, &family_case2(t)?, jobs)?,
        required: (1u32 << t) + 1,
    })
}
