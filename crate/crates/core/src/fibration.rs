//! Elliptic fibrations on the Kummer surface, at the level of divisor classes.
//!
//! Fibers are checked, never searched for: a [`Fiber`] is a weighted list of
//! (−2)-classes that must add up to the fiber class, and its Kodaira type is
//! read off the dual graph of the components.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::code::NodeSet;
use crate::error::{Error, Result};
use crate::labels::{NodeLabel, TropeLabel};
use crate::lattice::{int, DivisorClass, QuadraticSpace, RationalVector};
use crate::naruki::{as_integer, delta, trope_nodes, NarukiModel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KodairaType {
    Smooth,
    /// A cycle of `n ≥ 2` rational curves.
    I(u32),
    /// `Ĩ0*`: one double component meeting four simple ones.
    I0Star,
}

impl KodairaType {
    pub fn euler_number(self) -> u32 {
        match self {
            Self::Smooth => 0,
            Self::I(n) => n,
            Self::I0Star => 6,
        }
    }

    pub fn is_singular(self) -> bool {
        self != Self::Smooth
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Smooth => f.write_str("smooth"),
            Self::I(n) => write!(f, "I{n}"),
            Self::I0Star => f.write_str("I0*"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberComponent {
    pub label: String,
    pub class: DivisorClass,
    pub multiplicity: u32,
}

impl FiberComponent {
    pub fn new(label: impl Into<String>, class: DivisorClass, multiplicity: u32) -> Self {
        Self {
            label: label.into(),
            class,
            multiplicity,
        }
    }
}

/// Dual-graph description used in error messages: components with their
/// multiplicities, then the nonzero pairings.
fn describe_graph(components: &[FiberComponent], pairing: &[Vec<i64>]) -> String {
    let mut out = String::new();
    for c in components {
        out.push_str(&format!("{}x{} ", c.multiplicity, c.label));
    }
    for a in 0..components.len() {
        for b in a + 1..components.len() {
            if pairing[a][b] != 0 {
                out.push_str(&format!(
                    "[{}.{}={}]",
                    components[a].label, components[b].label, pairing[a][b]
                ));
            }
        }
    }
    out
}

/// Kodaira type of a fiber from its components.
///
/// Recognizes `I2` (two simple components meeting twice), `In` for `n ≥ 3`
/// (a cycle of simple components) and `I0*` (a double component meeting four
/// pairwise disjoint simple ones once each).
pub fn classify_fiber(
    space: &QuadraticSpace,
    components: &[FiberComponent],
) -> Result<KodairaType> {
    let n = components.len();
    let mut pairing = alloc::vec![alloc::vec![0i64; n]; n];
    for a in 0..n {
        for b in 0..n {
            let x = space.inner(&components[a].class, &components[b].class)?;
            pairing[a][b] = as_integer(&x)
                .ok_or_else(|| Error::UnrecognizedFiber(format!("non-integral pairing {x}")))?;
        }
    }
    let unrecognized = || Error::UnrecognizedFiber(describe_graph(components, &pairing));
    if n == 0 || (0..n).any(|a| pairing[a][a] != -2) {
        return Err(unrecognized());
    }
    let mults: Vec<u32> = components.iter().map(|c| c.multiplicity).collect();
    if mults.iter().all(|&m| m == 1) {
        if n == 2 && pairing[0][1] == 2 {
            return Ok(KodairaType::I(2));
        }
        if n >= 3 && is_cycle(&pairing) {
            return Ok(KodairaType::I(n as u32));
        }
        return Err(unrecognized());
    }
    if n == 5 {
        let doubles: Vec<usize> = (0..n).filter(|&a| mults[a] == 2).collect();
        if let [center] = doubles[..] {
            let leaves: Vec<usize> = (0..n).filter(|&a| a != center).collect();
            let star = leaves
                .iter()
                .all(|&a| mults[a] == 1 && pairing[center][a] == 1)
                && leaves
                    .iter()
                    .all(|&a| leaves.iter().all(|&b| a == b || pairing[a][b] == 0));
            if star {
                return Ok(KodairaType::I0Star);
            }
        }
    }
    Err(unrecognized())
}

fn is_cycle(pairing: &[Vec<i64>]) -> bool {
    let n = pairing.len();
    for a in 0..n {
        let mut degree = 0;
        for b in 0..n {
            if a == b {
                continue;
            }
            match pairing[a][b] {
                0 => {}
                1 => degree += 1,
                _ => return false,
            }
        }
        if degree != 2 {
            return false;
        }
    }
    // 2-regular; connected iff a walk from 0 visits every vertex
    let mut seen = alloc::vec![false; n];
    let mut stack = alloc::vec![0];
    while let Some(a) = stack.pop() {
        if seen[a] {
            continue;
        }
        seen[a] = true;
        stack.extend((0..n).filter(|&b| b != a && pairing[a][b] == 1));
    }
    seen.into_iter().all(|s| s)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fiber {
    pub label: String,
    pub components: Vec<FiberComponent>,
    pub kodaira_type: KodairaType,
    pub euler_number: u32,
}

impl Fiber {
    /// Classifies the components and checks they add up to `fiber_class`.
    pub fn new(
        space: &QuadraticSpace,
        label: impl Into<String>,
        components: Vec<FiberComponent>,
        fiber_class: &DivisorClass,
    ) -> Result<Self> {
        let label = label.into();
        let total = weighted_sum(fiber_class.dim(), &components);
        if &total != fiber_class {
            return Err(Error::IdentityFailed(format!(
                "components of {label} do not add up to the fiber class"
            )));
        }
        let kodaira_type = classify_fiber(space, &components)?;
        Ok(Self {
            label,
            components,
            euler_number: kodaira_type.euler_number(),
            kodaira_type,
        })
    }

    /// A smooth fiber; components are not tracked.
    pub fn smooth(label: impl Into<String>) -> Self {
        Self {
            label: label.into(),
            components: Vec::new(),
            kodaira_type: KodairaType::Smooth,
            euler_number: 0,
        }
    }

    pub fn total_class(&self, dim: usize) -> DivisorClass {
        weighted_sum(dim, &self.components)
    }
}

fn weighted_sum(dim: usize, components: &[FiberComponent]) -> DivisorClass {
    components.iter().fold(RationalVector::zero(dim), |acc, c| {
        acc + c.class.scale_int(i64::from(c.multiplicity))
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section {
    pub label: String,
    pub class: DivisorClass,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fibration {
    pub space: QuadraticSpace,
    pub fiber_class: DivisorClass,
    pub fibers: Vec<Fiber>,
    pub sections: Vec<Section>,
}

impl Fibration {
    /// Sum of the Euler numbers of the listed fibers.
    pub fn euler_sum(&self) -> u32 {
        self.fibers.iter().map(|f| f.euler_number).sum()
    }

    pub fn singular_fibers(&self) -> impl Iterator<Item = &Fiber> {
        self.fibers.iter().filter(|f| f.kodaira_type.is_singular())
    }

    pub fn count_of(&self, kind: KodairaType) -> usize {
        self.fibers
            .iter()
            .filter(|f| f.kodaira_type == kind)
            .count()
    }

    pub fn fiber_self_intersection(&self) -> Result<i64> {
        let x = self.space.norm(&self.fiber_class)?;
        as_integer(&x).ok_or_else(|| Error::IdentityFailed(format!("F² = {x} is not integral")))
    }

    /// `⟨s, F⟩` for every section, in order.
    pub fn section_degrees(&self) -> Result<Vec<i64>> {
        self.sections
            .iter()
            .map(|s| {
                let x = self.space.inner(&s.class, &self.fiber_class)?;
                as_integer(&x)
                    .ok_or_else(|| Error::IdentityFailed(format!("⟨{}, F⟩ = {x}", s.label)))
            })
            .collect()
    }

    /// `F² = 0`, sections of degree one, fibers adding up to `F`, every
    /// component a (−2)-class with non-negative pairings between distinct
    /// components.
    pub fn verify(&self) -> Result<()> {
        if self.fiber_self_intersection()? != 0 {
            return Err(Error::IdentityFailed(String::from("F² ≠ 0")));
        }
        if let Some(k) = self.section_degrees()?.iter().position(|&d| d != 1) {
            return Err(Error::IdentityFailed(format!(
                "section {} does not meet F once",
                self.sections[k].label
            )));
        }
        let dim = self.fiber_class.dim();
        for fiber in self.fibers.iter().filter(|f| !f.components.is_empty()) {
            if fiber.total_class(dim) != self.fiber_class {
                return Err(Error::IdentityFailed(format!("{} ≠ F", fiber.label)));
            }
            for (a, ca) in fiber.components.iter().enumerate() {
                if self.space.norm(&ca.class)? != int(-2) {
                    return Err(Error::IdentityFailed(format!(
                        "{} is not a (−2)-class",
                        ca.label
                    )));
                }
                for cb in &fiber.components[a + 1..] {
                    if self.space.inner(&ca.class, &cb.class)? < int(0) {
                        return Err(Error::IdentityFailed(format!(
                            "{} and {} pair negatively",
                            ca.label, cb.label
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Order of the six `I2` fibers through `p12`, as pairs of positions in the
/// sorted complement `{3, 4, 5, 6}`: `E45, E46, E35, E36, E34, E56`.
const I2_ORDER: [(usize, usize); 6] = [(1, 2), (1, 3), (0, 2), (0, 3), (0, 1), (2, 3)];

/// The fibration cut out by the pencil of lines through `pij`, with fiber
/// class `F = L − E0 − Eij`.
///
/// The two `I0*` fibers are centered at `C1i` and `C1j` (with `C11 = C0`).
/// The six `I2` fibers are `(F − Eab) + Eab` for `a, b ∉ {i, j}`. The sections
/// are the four tropes through `E0` but not `Eij`.
pub fn build_fibration_through(model: &NarukiModel, i: u8, j: u8) -> Result<Fibration> {
    delta(i, j)?;
    let space = model.space().clone();
    let e_ij = NodeLabel::E(i, j);
    let fiber_class = model.l_class() - model.node_class(NodeLabel::E0) - model.node_class(e_ij);
    let rest: Vec<u8> = (1..=6).filter(|&k| k != i && k != j).collect();

    let mut fibers = Vec::with_capacity(8);
    for (n, center_index) in [i, j].into_iter().enumerate() {
        let center = TropeLabel::c(1, center_index)?;
        let mut components: Vec<FiberComponent> = rest
            .iter()
            .map(|&k| {
                let node = NodeLabel::e(center_index, k).expect("k differs from center");
                FiberComponent::new(node.to_string(), model.node_class(node), 1)
            })
            .collect();
        components.insert(
            2,
            FiberComponent::new(center.to_string(), model.trope_class(center), 2),
        );
        fibers.push(Fiber::new(
            &space,
            format!("F{}", n + 1),
            components,
            &fiber_class,
        )?);
    }
    for (n, &(a, b)) in I2_ORDER.iter().enumerate() {
        let node = NodeLabel::E(rest[a], rest[b]);
        let node_class = model.node_class(node);
        let residual = &fiber_class - &node_class;
        let components = alloc::vec![
            FiberComponent::new(format!("L-E0-{e_ij}-{node}"), residual, 1),
            FiberComponent::new(node.to_string(), node_class, 1),
        ];
        fibers.push(Fiber::new(
            &space,
            format!("F{}", n + 3),
            components,
            &fiber_class,
        )?);
    }

    let sections = TropeLabel::all()
        .into_iter()
        .filter(|&t| {
            let nodes = trope_nodes(t);
            nodes.contains(NodeLabel::E0) && !nodes.contains(e_ij)
        })
        .map(|t| Section {
            label: t.to_string(),
            class: model.trope_class(t),
        })
        .collect();

    Ok(Fibration {
        space,
        fiber_class,
        fibers,
        sections,
    })
}

/// The fibration through `p12`.
pub fn build_jacobian_fibration(model: &NarukiModel) -> Fibration {
    build_fibration_through(model, 1, 2).expect("(1, 2) is a valid pair")
}

/// Checks that the simple components of the `I0*` fibers are exactly the
/// nodes of `branch`, and that `Σ_{branch} n = Σ_{I0*} (fiber − 2·center)`.
pub fn even_eight_from_fibers(fib: &Fibration, model: &NarukiModel, branch: NodeSet) -> bool {
    let dim = fib.fiber_class.dim();
    let stars: Vec<&Fiber> = fib
        .fibers
        .iter()
        .filter(|f| f.kodaira_type == KodairaType::I0Star)
        .collect();
    let mut rhs = RationalVector::zero(dim);
    let mut simple: BTreeSet<DivisorClass> = BTreeSet::new();
    for f in &stars {
        rhs += f.total_class(dim);
        for c in &f.components {
            if c.multiplicity == 2 {
                rhs -= c.class.scale_int(2);
            } else {
                simple.insert(c.class.clone());
            }
        }
    }
    let branch_classes: BTreeSet<DivisorClass> =
        branch.nodes().map(|n| model.node_class(n)).collect();
    model.node_sum(branch) == rhs && simple == branch_classes
}

/// The fibration induced on the double cover branched along `branch`.
///
/// An `I0*` fiber whose simple components all lie in the branch becomes a
/// smooth fiber. A fiber with no component in the branch and orthogonal to
/// it splits into two copies. Anything else is outside the modeled cases.
pub fn transform_double_cover(
    fib: &Fibration,
    model: &NarukiModel,
    branch: NodeSet,
) -> Result<Fibration> {
    if branch == NodeSet::EMPTY {
        return Ok(fib.clone());
    }
    if !model.is_even(branch) {
        return Err(Error::NotEven);
    }
    let branch_classes: Vec<DivisorClass> = branch.nodes().map(|n| model.node_class(n)).collect();
    let mut fibers = Vec::new();
    for fiber in &fib.fibers {
        let in_branch = |c: &FiberComponent| branch_classes.contains(&c.class);
        let simple_in_branch = fiber
            .components
            .iter()
            .filter(|c| c.multiplicity == 1)
            .all(in_branch);
        if fiber.kodaira_type == KodairaType::I0Star
            && simple_in_branch
            && !fiber
                .components
                .iter()
                .any(|c| c.multiplicity == 2 && in_branch(c))
        {
            fibers.push(Fiber::smooth(format!("{}~", fiber.label)));
            continue;
        }
        let mut disjoint = !fiber.components.iter().any(in_branch);
        for c in &fiber.components {
            for b in &branch_classes {
                disjoint &= fib.space.inner(&c.class, b)? == int(0);
            }
        }
        if !disjoint {
            return Err(Error::PartialBranchIncidence(fiber.label.clone()));
        }
        for suffix in ["'", "''"] {
            let mut copy = fiber.clone();
            copy.label = format!("{}{suffix}", fiber.label);
            fibers.push(copy);
        }
    }
    Ok(Fibration {
        space: fib.space.clone(),
        fiber_class: fib.fiber_class.clone(),
        fibers,
        sections: fib.sections.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn jacobian_fibration_shape() {
        let model = NarukiModel::new();
        let fib = build_jacobian_fibration(&model);
        fib.verify().unwrap();
        assert_eq!(fib.fiber_self_intersection().unwrap(), 0);
        let kinds: Vec<_> = fib.fibers.iter().map(|f| f.kodaira_type).collect();
        assert_eq!(kinds[..2], [KodairaType::I0Star; 2]);
        assert_eq!(kinds[2..], [KodairaType::I(2); 6]);
        let names: Vec<_> = fib.sections.iter().map(|s| s.label.as_str()).collect();
        assert_eq!(names, ["C13", "C14", "C15", "C16"]);
        assert_eq!(fib.euler_sum(), 24);
        // F3 is (L − E0 − E12 − E45) + E45
        assert_eq!(fib.fibers[2].components[1].label, "E45");
        assert_eq!(fib.fibers[7].components[1].label, "E56");
    }

    #[test]
    fn f1_component_sum() {
        let model = NarukiModel::new();
        let fib = build_jacobian_fibration(&model);
        let labels: Vec<_> = fib.fibers[0]
            .components
            .iter()
            .map(|c| (c.label.as_str(), c.multiplicity))
            .collect();
        assert_eq!(
            labels,
            [("E13", 1), ("E14", 1), ("C0", 2), ("E15", 1), ("E16", 1)]
        );
    }

    #[test]
    fn single_component_is_not_a_fiber() {
        let model = NarukiModel::new();
        let e12 = model.node_class(NodeLabel::E(1, 2));
        let err = classify_fiber(model.space(), &[FiberComponent::new("E12", e12, 1)]);
        assert!(matches!(err, Err(Error::UnrecognizedFiber(_))));
    }

    #[test]
    fn i2_from_residual_and_node() {
        let model = NarukiModel::new();
        let f = model.l_class()
            - model.node_class(NodeLabel::E0)
            - model.node_class(NodeLabel::E(1, 2));
        let e45 = model.node_class(NodeLabel::E(4, 5));
        let comps = vec![
            FiberComponent::new("A", &f - &e45, 1),
            FiberComponent::new("E45", e45, 1),
        ];
        assert_eq!(
            classify_fiber(model.space(), &comps).unwrap(),
            KodairaType::I(2)
        );
    }

    #[test]
    fn i3_cycle() {
        // three (−2)-vectors meeting pairwise once: a triangle
        let labels = ["a", "b", "c"];
        let q = |x| int(x);
        let gram = vec![
            vec![q(-2), q(1), q(1)],
            vec![q(1), q(-2), q(1)],
            vec![q(1), q(1), q(-2)],
        ];
        let space =
            QuadraticSpace::new(labels.iter().map(|s| s.to_string()).collect(), gram).unwrap();
        let comps: Vec<_> = (0..3)
            .map(|k| FiberComponent::new(labels[k], RationalVector::unit(3, k), 1))
            .collect();
        assert_eq!(classify_fiber(&space, &comps).unwrap(), KodairaType::I(3));
    }

    #[test]
    fn delta12_from_fibers() {
        let model = NarukiModel::new();
        let fib = build_jacobian_fibration(&model);
        let d12 = delta(1, 2).unwrap();
        assert!(even_eight_from_fibers(&fib, &model, d12));
        // explicit form: F1 + F2 − 2(C0 + C12)
        let dim = fib.fiber_class.dim();
        let c0 = model.trope_class(TropeLabel::C0);
        let c12 = model.trope_class(TropeLabel::C(1, 2));
        let rhs = fib.fibers[0].total_class(dim) + fib.fibers[1].total_class(dim)
            - (c0 + &c12).scale_int(2);
        assert_eq!(model.node_sum(d12), rhs);
        let wrong = fib.fibers[0].total_class(dim) + fib.fibers[1].total_class(dim)
            - (model.trope_class(TropeLabel::C0) + model.trope_class(TropeLabel::C(1, 3)))
                .scale_int(2);
        assert_ne!(model.node_sum(d12), wrong);
    }

    #[test]
    fn cover_along_delta12() {
        let model = NarukiModel::new();
        let fib = build_jacobian_fibration(&model);
        let cover = transform_double_cover(&fib, &model, delta(1, 2).unwrap()).unwrap();
        assert_eq!(cover.count_of(KodairaType::I(2)), 12);
        assert_eq!(cover.count_of(KodairaType::Smooth), 2);
        assert_eq!(cover.fibers[0].label, "F1~");
        assert_eq!(cover.euler_sum(), 24);
        assert_eq!(cover.sections.len(), 4);
        let same = transform_double_cover(&fib, &model, NodeSet::EMPTY).unwrap();
        assert_eq!(same, fib);
    }

    #[test]
    fn cover_along_a_partial_branch_is_rejected() {
        let model = NarukiModel::new();
        let fib = build_jacobian_fibration(&model);
        // Δ34 contains E13, E14 from F1 but not E15, E16
        let err = transform_double_cover(&fib, &model, delta(3, 4).unwrap());
        assert!(matches!(err, Err(Error::PartialBranchIncidence(_))));
    }
}
