//! Homology of the fibers of the looped degree-2 map and the H-space square,
//! modeled on Dyer-Lashof words, with the dual Steenrod action given by the
//! Nishida relations
//! `Sq^t_* Q_r(x) = sum_i (t-2i, r+q-2t+2i) Q_{r-t+2i} Sq^i_*(x)`, `q = |x|`,
//! in the pair convention `(a, b) = (a+b)!/(a! b!)`.
//!
//! Each model carries two generators, a top one in degree `N-k` and a bottom
//! one in degree `N-k-1`, with the coaction `Sq^1_*(top) = bottom` and every
//! other dual square vanishing on generators. A pair coefficient with a
//! negative entry contributes zero, a negative lower index denotes the zero
//! operation, and `Q_0` is kept as a flagged squaring word that never enters
//! a primitive basis.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, AddAssign};

use crate::binom::binom_pair_mod2;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiberKind {
    /// Fiber of the k-fold looped degree-2 map; generators `v`, `u`.
    Deg2Fiber,
    /// Fiber of the H-space squaring map; generators `v`, `u` and the formal
    /// top word.
    PsiFiber,
    /// Fiber of the squaring map on the stable loop space; generators `z`, `w`.
    QPsiFiber,
}

/// One fiber-space homology model: kind, loop count `k`, sphere dimension `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiberModel {
    kind: FiberKind,
    loop_count: u64,
    sphere_dim: u64,
}

impl FiberModel {
    /// Generic model; the two-generator description needs `1 < k < N - 3`.
    pub fn new(kind: FiberKind, loop_count: u64, sphere_dim: u64) -> Result<Self> {
        if loop_count <= 1 || loop_count + 3 >= sphere_dim {
            return Err(Error::InvalidParameter(format!(
                "fiber model needs 1 < k < N - 3, got k = {loop_count}, N = {sphere_dim}"
            )));
        }
        Ok(FiberModel { kind, loop_count, sphere_dim })
    }

    fn specialized(kind: FiberKind, n: u32, q: u64) -> Result<Self> {
        if n == 0 || q == 0 {
            return Err(Error::InvalidParameter(format!(
                "specialized fiber model needs n >= 1 and q >= 1, got n = {n}, q = {q}"
            )));
        }
        if n > 32 || q > 1 << 24 {
            return Err(Error::InvalidParameter(format!(
                "specialized fiber model needs n <= 32 and q <= 2^24, got n = {n}, q = {q}"
            )));
        }
        Self::new(kind, 1u64 << n, (q << (n + 2)) + 1)
    }

    /// `Omega^{2^n} S^{q 2^{n+2} + 1} {[2]}`.
    pub fn deg2(n: u32, q: u64) -> Result<Self> {
        Self::specialized(FiberKind::Deg2Fiber, n, q)
    }

    /// `Omega^{2^n} S^{q 2^{n+2} + 1} {Psi}`.
    pub fn psi(n: u32, q: u64) -> Result<Self> {
        Self::specialized(FiberKind::PsiFiber, n, q)
    }

    /// `(Omega^{2^n} Q S^{q 2^{n+2} + 1}) {Psi}`.
    pub fn q_psi(n: u32, q: u64) -> Result<Self> {
        Self::specialized(FiberKind::QPsiFiber, n, q)
    }

    pub fn kind(&self) -> FiberKind {
        self.kind
    }

    pub fn loop_count(&self) -> u64 {
        self.loop_count
    }

    pub fn sphere_dim(&self) -> u64 {
        self.sphere_dim
    }

    /// The stable-model sibling with the same parameters.
    pub fn q_psi_counterpart(&self) -> FiberModel {
        FiberModel {
            kind: FiberKind::QPsiFiber,
            ..*self
        }
    }

    pub fn top_name(&self) -> &'static str {
        match self.kind {
            FiberKind::Deg2Fiber | FiberKind::PsiFiber => "v",
            FiberKind::QPsiFiber => "z",
        }
    }

    pub fn bottom_name(&self) -> &'static str {
        match self.kind {
            FiberKind::Deg2Fiber | FiberKind::PsiFiber => "u",
            FiberKind::QPsiFiber => "w",
        }
    }

    pub fn generator_degree(&self, name: &str) -> Option<u64> {
        if name == self.top_name() {
            Some(self.sphere_dim - self.loop_count)
        } else if name == self.bottom_name() {
            Some(self.sphere_dim - self.loop_count - 1)
        } else {
            None
        }
    }
}

/// A word `Q_{i_1} ... Q_{i_m}(g)` on a named generator. An index 0 marks a
/// squaring word; the leading operation of a formal word is the bookkeeping
/// top operation, which only `gamma_star` knows how to move.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DLWord {
    indices: Vec<u64>,
    generator: String,
    formal_top: bool,
}

impl DLWord {
    pub fn new(indices: impl IntoIterator<Item = u64>, generator: &str) -> Self {
        DLWord {
            indices: indices.into_iter().collect(),
            generator: generator.to_string(),
            formal_top: false,
        }
    }

    /// The formal top word `Qbar_index(generator)`.
    pub fn formal(index: u64, generator: &str) -> Self {
        DLWord {
            indices: vec![index],
            generator: generator.to_string(),
            formal_top: true,
        }
    }

    pub fn generator_word(generator: &str) -> Self {
        Self::new([], generator)
    }

    pub fn indices(&self) -> &[u64] {
        &self.indices
    }

    pub fn generator(&self) -> &str {
        &self.generator
    }

    pub fn is_formal_top(&self) -> bool {
        self.formal_top
    }

    /// True when some factor is the squaring operation `Q_0`.
    pub fn is_square_word(&self) -> bool {
        self.indices.contains(&0)
    }

    /// `|Q_i(x)| = i + 2|x|`, folded right to left over the generator degree.
    pub fn degree(&self, model: &FiberModel) -> Result<u64> {
        let base = model
            .generator_degree(&self.generator)
            .ok_or_else(|| Error::ForeignWord(self.to_string()))?;
        Ok(self.indices.iter().rev().fold(base, |d, &i| i + 2 * d))
    }
}

impl fmt::Display for DLWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (pos, &i) in self.indices.iter().enumerate() {
            if pos == 0 && self.formal_top {
                write!(f, "Qbar{i} ")?;
            } else {
                write!(f, "Q{i} ")?;
            }
        }
        write!(f, "{}", self.generator)
    }
}

/// An F2 sum of Dyer-Lashof words.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DLElement {
    terms: BTreeSet<DLWord>,
}

impl DLElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(w: DLWord) -> Self {
        let mut terms = BTreeSet::new();
        terms.insert(w);
        DLElement { terms }
    }

    pub fn toggle(&mut self, w: DLWord) {
        if !self.terms.remove(&w) {
            self.terms.insert(w);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &DLWord> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// The common degree of a nonzero homogeneous element in `model`.
    pub fn degree(&self, model: &FiberModel) -> Result<Option<u64>> {
        let mut degrees = BTreeSet::new();
        for w in &self.terms {
            degrees.insert(w.degree(model)?);
        }
        match degrees.len() {
            0 => Ok(None),
            1 => Ok(degrees.into_iter().next()),
            _ => Err(Error::NotHomogeneous),
        }
    }
}

impl From<DLWord> for DLElement {
    fn from(w: DLWord) -> Self {
        Self::single(w)
    }
}

impl Add for DLElement {
    type Output = DLElement;
    fn add(mut self, rhs: DLElement) -> DLElement {
        self += rhs;
        self
    }
}

impl AddAssign for DLElement {
    fn add_assign(&mut self, rhs: DLElement) {
        for w in rhs.terms {
            self.toggle(w);
        }
    }
}

impl fmt::Display for DLElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for w in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{w}")?;
            first = false;
        }
        Ok(())
    }
}

/// The coaction on bare generators: `Sq^1_*` drops the top generator to the
/// bottom one and everything else vanishes.
fn sq_on_generator(t: u64, generator: &str, model: &FiberModel) -> Result<DLElement> {
    if model.generator_degree(generator).is_none() {
        return Err(Error::ForeignWord(generator.to_string()));
    }
    Ok(match t {
        0 => DLElement::single(DLWord::generator_word(generator)),
        1 if generator == model.top_name() => {
            DLElement::single(DLWord::generator_word(model.bottom_name()))
        }
        _ => DLElement::zero(),
    })
}

fn sq_lower_word(t: u64, w: &DLWord, model: &FiberModel) -> Result<DLElement> {
    w.degree(model)?; // also rejects foreign generators
    if t == 0 {
        return Ok(DLElement::single(w.clone()));
    }
    if w.is_formal_top() {
        return Err(Error::FormalWordAction);
    }
    let Some((&r, rest)) = w.indices().split_first() else {
        return sq_on_generator(t, w.generator(), model);
    };
    let inner = DLWord::new(rest.iter().copied(), w.generator());
    let q = inner.degree(model)? as i128;
    let (t_i, r_i) = (t as i128, r as i128);

    let mut out = DLElement::zero();
    for i in 0..=t / 2 {
        let i_i = i as i128;
        let pair_left = t_i - 2 * i_i;
        let pair_right = r_i + q - 2 * t_i + 2 * i_i;
        if pair_right < 0 || !binom_pair_mod2(pair_left as u64, pair_right as u64) {
            continue;
        }
        let new_index = r_i - t_i + 2 * i_i;
        if new_index < 0 {
            continue;
        }
        for word in sq_lower_word(i, &inner, model)?.terms() {
            let mut indices = Vec::with_capacity(1 + word.indices().len());
            indices.push(new_index as u64);
            indices.extend_from_slice(word.indices());
            out.toggle(DLWord::new(indices, word.generator()));
        }
    }
    Ok(out)
}

/// The dual Steenrod operation `Sq^t_*` on an element of the model.
pub fn sq_lower(t: u64, e: &DLElement, model: &FiberModel) -> Result<DLElement> {
    let mut out = DLElement::zero();
    for w in e.terms() {
        out += sq_lower_word(t, w, model)?;
    }
    Ok(out)
}

/// Pushes a Psi-fiber element into the stable model: ordinary words rename
/// generators, and the formal top word `Qbar_{k-1}(v)` goes to
/// `Q_{k-1}(z) + Q_{k+1}(w)`. Only defined when the sphere dimension is not
/// 3 mod 4.
pub fn gamma_star(e: &DLElement, model: &FiberModel) -> Result<DLElement> {
    if model.kind() != FiberKind::PsiFiber {
        return Err(Error::InvalidParameter(
            "gamma_star starts from a PsiFiber model".into(),
        ));
    }
    if model.sphere_dim() % 4 == 3 {
        return Err(Error::GammaInapplicable(model.sphere_dim()));
    }
    let stable = model.q_psi_counterpart();
    let top_index = model.loop_count() - 1;
    let mut out = DLElement::zero();
    for w in e.terms() {
        let rename = |g: &str| -> Result<&'static str> {
            if g == model.top_name() {
                Ok(stable.top_name())
            } else if g == model.bottom_name() {
                Ok(stable.bottom_name())
            } else {
                Err(Error::ForeignWord(w.to_string()))
            }
        };
        if w.is_formal_top() {
            if w.indices() != [top_index] || w.generator() != model.top_name() {
                return Err(Error::InvalidParameter(format!(
                    "the formal top word is Qbar{top_index}(v); got {w}"
                )));
            }
            out.toggle(DLWord::new([top_index], stable.top_name()));
            out.toggle(DLWord::new([top_index + 2], stable.bottom_name()));
        } else {
            out.toggle(DLWord::new(w.indices().iter().copied(), rename(w.generator())?));
        }
    }
    Ok(out)
}

/// The short-word primitive basis in degrees up to `degree_window_max`:
/// `{u, v, Q_i(u), Q_j(v)}` with `1 <= index <= index_cap`, where the
/// `PsiFiber` top word at index `k-1` is the formal one. The description is
/// only valid below `3 (N - k - 1)`.
pub fn primitive_basis(
    model: &FiberModel,
    degree_window_max: u64,
    index_cap: u64,
) -> Result<Vec<DLElement>> {
    let bound = 3 * (model.sphere_dim() - model.loop_count() - 1);
    if degree_window_max > bound {
        return Err(Error::WindowTooLarge { window: degree_window_max, bound });
    }
    let mut words = vec![
        DLWord::generator_word(model.bottom_name()),
        DLWord::generator_word(model.top_name()),
    ];
    for i in 1..=index_cap {
        words.push(DLWord::new([i], model.bottom_name()));
        if model.kind() == FiberKind::PsiFiber && i == model.loop_count() - 1 {
            words.push(DLWord::formal(i, model.top_name()));
        } else {
            words.push(DLWord::new([i], model.top_name()));
        }
    }
    let mut graded: Vec<(u64, DLWord)> = Vec::new();
    for w in words {
        let d = w.degree(model)?;
        if d <= degree_window_max {
            graded.push((d, w));
        }
    }
    graded.sort();
    Ok(graded.into_iter().map(|(_, w)| DLElement::single(w)).collect())
}

/// The Steenrod-module comparison between the degree-2 fiber and the
/// squaring fiber in the distinguished degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinguishReport {
    pub n: u32,
    pub q: u64,
    pub loop_count: u64,
    pub sphere_dim: u64,
    /// Degree of the unique short-word primitive, `2N - k - 1`.
    pub degree: u64,
    pub operation: u64,
    pub deg2_primitive: DLElement,
    pub deg2_action: DLElement,
    pub psi_primitive: DLElement,
    pub gamma_image: DLElement,
    pub qpsi_action: DLElement,
    pub modules_differ: bool,
    pub assumption: &'static str,
}

impl fmt::Display for DistinguishReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "fibers over S^{} with {} loops (n={}, q={})",
            self.sphere_dim, self.loop_count, self.n, self.q
        )?;
        writeln!(f, "distinguished degree: {}", self.degree)?;
        writeln!(f, "[2]-fiber primitive: {}", self.deg2_primitive)?;
        writeln!(f, "Sq{}_* on it: {}", self.operation, self.deg2_action)?;
        writeln!(f, "Psi-fiber primitive: {}", self.psi_primitive)?;
        writeln!(f, "gamma image: {}", self.gamma_image)?;
        writeln!(f, "Sq{}_* on the image: {}", self.operation, self.qpsi_action)?;
        writeln!(
            f,
            "verdict: the Steenrod modules {}",
            if self.modules_differ { "differ" } else { "agree" }
        )?;
        write!(f, "note: {}", self.assumption)
    }
}

const MODEL_ASSUMPTION: &str =
    "generator coaction model: Sq1_* top = bottom, higher dual squares vanish on generators";

/// Runs the comparison pipeline for `Omega^{2^n} S^{q 2^{n+2}+1}`.
pub fn distinguish(n: u32, q: u64) -> Result<DistinguishReport> {
    if n <= 1 || q == 0 {
        return Err(Error::InvalidParameter(format!(
            "distinguish requires n > 1 and q >= 1, got n = {n}, q = {q}"
        )));
    }
    // The basis enumeration walks 2^n - 1 indices per generator.
    if n > 16 {
        return Err(Error::InvalidParameter(format!(
            "distinguish enumerates 2^n words and needs n <= 16, got n = {n}"
        )));
    }
    let deg2 = FiberModel::deg2(n, q)?;
    let psi = FiberModel::psi(n, q)?;
    let q_psi = FiberModel::q_psi(n, q)?;
    let k = deg2.loop_count();
    let degree = 2 * deg2.sphere_dim() - k - 1;
    let operation = k; // Sq^{2^n}_*

    let unique_in_degree = |model: &FiberModel| -> Result<DLElement> {
        let hits: Vec<DLElement> = primitive_basis(model, degree, k - 1)?
            .into_iter()
            .filter(|e| {
                e.terms()
                    .next()
                    .map(|w| w.degree(model).ok() == Some(degree))
                    .unwrap_or(false)
            })
            .collect();
        match <[DLElement; 1]>::try_from(hits) {
            Ok([only]) => Ok(only),
            Err(hits) => Err(Error::InvalidParameter(format!(
                "expected a unique primitive in degree {degree}, found {}",
                hits.len()
            ))),
        }
    };

    let deg2_primitive = unique_in_degree(&deg2)?;
    let deg2_action = sq_lower(operation, &deg2_primitive, &deg2)?;
    let psi_primitive = unique_in_degree(&psi)?;
    let gamma_image = gamma_star(&psi_primitive, &psi)?;
    let qpsi_action = sq_lower(operation, &gamma_image, &q_psi)?;
    let modules_differ = deg2_action.is_zero() && !qpsi_action.is_zero();

    Ok(DistinguishReport {
        n,
        q,
        loop_count: k,
        sphere_dim: deg2.sphere_dim(),
        degree,
        operation,
        deg2_primitive,
        deg2_action,
        psi_primitive,
        gamma_image,
        qpsi_action,
        modules_differ,
        assumption: MODEL_ASSUMPTION,
    })
}
