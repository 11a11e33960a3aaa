//! Finite Steenrod modules: stunted projective spaces and the complexes
//! `X(n, k)`.
//!
//! A module is a finite graded F2 vector space with an explicit table for
//! the generator actions `Sq^i`. For a stunted projective space the classes
//! are `x^j`, `a <= j <= b`, with `Sq^i(x^j) = C(j, i) x^{i+j}` truncated to
//! the cell range; suspension shifts degrees without changing the action.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rustc_hash::FxHashMap;

use crate::binom::choose_mod2;
use crate::element::SteenrodElement;
use crate::error::{Error, Result};
use crate::monomial::SqMonomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleClass {
    pub name: String,
    pub degree: u32,
}

/// Cells `x^a ... x^b` suspended `shift` times.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StuntedProjectiveSpec {
    pub a: u32,
    pub b: u32,
    pub shift: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteenrodModule {
    classes: Vec<ModuleClass>,
    index: FxHashMap<String, usize>,
    /// `(i, class index) -> F2 sum of class indices` for `Sq^i`, `i >= 1`.
    action: BTreeMap<(u32, usize), Vec<usize>>,
}

impl SteenrodModule {
    fn build(classes: Vec<ModuleClass>, action: BTreeMap<(u32, usize), Vec<usize>>) -> Self {
        let index = classes
            .iter()
            .enumerate()
            .map(|(i, c)| (c.name.clone(), i))
            .collect();
        SteenrodModule { classes, index, action }
    }

    pub fn classes(&self) -> &[ModuleClass] {
        &self.classes
    }

    pub fn class_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn classes_in_degree(&self, degree: u32) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&i| self.classes[i].degree == degree)
            .collect()
    }

    pub fn degrees(&self) -> BTreeSet<u32> {
        self.classes.iter().map(|c| c.degree).collect()
    }

    /// `Sq^i` on a single class, as an F2 set of class indices.
    pub fn act_generator(&self, i: u32, class: usize) -> BTreeSet<usize> {
        assert!(class < self.classes.len(), "class index out of range");
        if i == 0 {
            return BTreeSet::from([class]);
        }
        self.action
            .get(&(i, class))
            .map(|v| v.iter().copied().collect())
            .unwrap_or_default()
    }

    /// A monomial applied right to left.
    pub fn act_monomial(&self, m: &SqMonomial, class: usize) -> BTreeSet<usize> {
        let mut current = BTreeSet::from([class]);
        for &i in m.exponents().iter().rev() {
            let mut next = BTreeSet::new();
            for y in current {
                for image in self.act_generator(i, y) {
                    if !next.remove(&image) {
                        next.insert(image);
                    }
                }
            }
            current = next;
        }
        current
    }

    /// An element applied linearly; callers pass admissible forms.
    pub fn act(&self, e: &SteenrodElement, class: usize) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for m in e.terms() {
            for image in self.act_monomial(m, class) {
                if !out.remove(&image) {
                    out.insert(image);
                }
            }
        }
        out
    }

    pub fn act_by_name(&self, e: &SteenrodElement, class: &str) -> Result<BTreeSet<usize>> {
        let idx = self
            .class_index(class)
            .ok_or_else(|| Error::UnknownClass(class.to_string()))?;
        Ok(self.act(e, idx))
    }

    pub fn class_names(&self, indices: &BTreeSet<usize>) -> Vec<&str> {
        indices.iter().map(|&i| self.classes[i].name.as_str()).collect()
    }
}

impl fmt::Display for SteenrodModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.classes {
            writeln!(f, "class {} {}", c.name, c.degree)?;
        }
        for ((i, class), images) in &self.action {
            let names: Vec<&str> = images.iter().map(|&j| self.classes[j].name.as_str()).collect();
            writeln!(f, "Sq{} {} = {}", i, self.classes[*class].name, names.join(" + "))?;
        }
        Ok(())
    }
}

/// The cohomology of a stunted projective space, classes named `x{j}`.
pub fn stunted(spec: &StuntedProjectiveSpec) -> Result<SteenrodModule> {
    if spec.a == 0 {
        return Err(Error::InvalidParameter("stunted spec needs a >= 1".into()));
    }
    if spec.b < spec.a {
        return Err(Error::InvalidParameter(format!(
            "stunted spec needs b >= a, got a = {}, b = {}",
            spec.a, spec.b
        )));
    }
    let classes: Vec<ModuleClass> = (spec.a..=spec.b)
        .map(|j| ModuleClass {
            name: format!("x{j}"),
            degree: j + spec.shift,
        })
        .collect();
    let mut action = BTreeMap::new();
    for j in spec.a..=spec.b {
        for i in 1..=spec.b - j {
            if choose_mod2(j as u64, i as u64) {
                let from = (j - spec.a) as usize;
                let to = (i + j - spec.a) as usize;
                action.insert((i, from), vec![to]);
            }
        }
    }
    Ok(SteenrodModule::build(classes, action))
}

/// The split model of `X(n, k)`: a sphere class `s` in degree `2n+1` with
/// trivial action, plus the stunted summand `x^{2n-k+1} ... x^{2n}` shifted
/// into degrees `4n-k+3 ... 4n+2`.
pub fn make_x(n: u32, k: u32) -> Result<SteenrodModule> {
    if n == 0 || n > (u32::MAX - 2) / 4 || k == 0 || k > 2 * n {
        return Err(Error::InvalidParameter(format!(
            "X(n, k) needs n >= 1 and 1 <= k <= 2n within range, got n = {n}, k = {k}"
        )));
    }
    let summand = stunted(&StuntedProjectiveSpec {
        a: 2 * n - k + 1,
        b: 2 * n,
        shift: 2 * n + 2,
    })?;
    let mut classes = vec![ModuleClass {
        name: "s".to_string(),
        degree: 2 * n + 1,
    }];
    classes.extend(summand.classes.iter().cloned());
    let action = summand
        .action
        .iter()
        .map(|(&(i, class), images)| {
            ((i, class + 1), images.iter().map(|&j| j + 1).collect())
        })
        .collect();
    Ok(SteenrodModule::build(classes, action))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adem::adem_normalize;

    fn act_names(m: &SteenrodModule, e: &str, class: &str) -> Vec<String> {
        let e: SteenrodElement = e.parse().unwrap();
        m.act_by_name(&e, class)
            .unwrap()
            .iter()
            .map(|&i| m.classes()[i].name.clone())
            .collect()
    }

    #[test]
    fn small_stunted_action() {
        let m = stunted(&StuntedProjectiveSpec { a: 2, b: 4, shift: 0 }).unwrap();
        assert_eq!(act_names(&m, "Sq2", "x2"), vec!["x4"]);
        assert!(act_names(&m, "Sq1", "x2").is_empty());
        assert_eq!(act_names(&m, "Sq1", "x3"), vec!["x4"]);
        // truncation above the top cell
        assert!(act_names(&m, "Sq2", "x3").is_empty());
    }

    #[test]
    fn instability_everywhere() {
        let m = stunted(&StuntedProjectiveSpec { a: 1, b: 9, shift: 3 }).unwrap();
        for j in 1..=9u32 {
            for i in j + 1..=12 {
                assert!(
                    act_names(&m, &format!("Sq{i}"), &format!("x{j}")).is_empty(),
                    "Sq{i} x{j}"
                );
            }
        }
    }

    #[test]
    fn bad_specs_are_rejected() {
        assert!(stunted(&StuntedProjectiveSpec { a: 3, b: 2, shift: 0 }).is_err());
        assert!(stunted(&StuntedProjectiveSpec { a: 0, b: 2, shift: 0 }).is_err());
        assert!(make_x(4, 0).is_err());
        assert!(make_x(4, 9).is_err());
    }

    #[test]
    fn x_cell_degrees() {
        let degrees: Vec<u32> = make_x(4, 6).unwrap().degrees().into_iter().collect();
        assert_eq!(degrees, vec![9, 13, 14, 15, 16, 17, 18]);

        let x814 = make_x(8, 14).unwrap();
        let expected: BTreeSet<u32> = std::iter::once(17).chain(21..=34).collect();
        assert_eq!(x814.degrees(), expected);

        let degrees: Vec<u32> = make_x(2, 2).unwrap().degrees().into_iter().collect();
        assert_eq!(degrees, vec![5, 9, 10]);
    }

    #[test]
    fn sphere_class_is_acted_on_trivially() {
        let m = make_x(4, 6).unwrap();
        for i in 1..=10 {
            assert!(act_names(&m, &format!("Sq{i}"), "s").is_empty());
        }
        assert!(matches!(
            m.act_by_name(&"Sq1".parse().unwrap(), "x99"),
            Err(Error::UnknownClass(_))
        ));
    }

    #[test]
    fn composite_actions_reach_the_top_class() {
        let m = make_x(4, 7).unwrap();
        let from = m.classes_in_degree(12);
        assert_eq!(from.len(), 1);
        let image = m.act(&"Sq4 Sq2".parse().unwrap(), from[0]);
        let names = m.class_names(&image);
        assert_eq!(names, vec!["x8"]);
        assert_eq!(m.classes()[*image.iter().next().unwrap()].degree, 18);

        let m = make_x(8, 15).unwrap();
        let from = m.classes_in_degree(20);
        let image = m.act(&"Sq8 Sq4 Sq2".parse().unwrap(), from[0]);
        assert_eq!(m.class_names(&image), vec!["x16"]);
        assert_eq!(m.classes()[*image.iter().next().unwrap()].degree, 34);
    }

    #[test]
    fn module_axiom_on_random_pairs() {
        // Composing generator actions must agree with acting by the Adem
        // normal form of the composite.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..200 {
            let a = 1 + (next() % 6) as u32;
            let b = a + (next() % 9) as u32;
            let shift = (next() % 4) as u32;
            let m = stunted(&StuntedProjectiveSpec { a, b, shift }).unwrap();
            let class = (next() as usize) % m.classes().len();
            let i = 1 + (next() % 10) as u32;
            let j = 1 + (next() % 10) as u32;
            let composite: SteenrodElement =
                SteenrodElement::from(SqMonomial::new([i, j]));
            let direct = m.act_monomial(&SqMonomial::new([i, j]), class);
            let via_normal_form = m.act(&adem_normalize(&composite).unwrap(), class);
            assert_eq!(direct, via_normal_form, "Sq{i} Sq{j} on class {class}");
        }
    }

    #[test]
    fn text_table_is_deterministic() {
        let m = stunted(&StuntedProjectiveSpec { a: 2, b: 4, shift: 1 }).unwrap();
        let expected = "class x2 3\nclass x3 4\nclass x4 5\nSq1 x3 = x4\nSq2 x2 = x4\n";
        assert_eq!(m.to_string(), expected);
    }
}
