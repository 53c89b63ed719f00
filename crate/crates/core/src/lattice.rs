//! Exact rational linear algebra over a fixed quadratic space.
//!
//! A [`QuadraticSpace`] is a labeled basis with a symmetric rational Gram
//! matrix. Vectors are [`RationalVector`]s of coordinates in that basis, and
//! a [`SublatticeModel`] is the ℤ-span of finitely many such vectors. The
//! sublattice keeps an integral Hermite basis of `denominator · generators`
//! so that membership is a triangular solve over ℤ.

use alloc::borrow::ToOwned;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::normal_form::{self, Hermite};

pub type Rational = BigRational;

pub fn int(x: i64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Coordinate vector over the basis of some [`QuadraticSpace`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RationalVector(Vec<Rational>);

/// Divisor classes are coordinate vectors in the node basis.
pub type DivisorClass = RationalVector;

impl RationalVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Self(alloc::vec![Rational::zero(); dim])
    }

    pub fn unit(dim: usize, index: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[index] = Rational::one();
        v
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&x| int(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.is_integer())
    }

    /// Least common multiple of the coordinate denominators.
    pub fn denominator(&self) -> BigInt {
        self.0
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self(self.0.iter().map(|x| x * factor).collect())
    }

    pub fn scale_int(&self, factor: i64) -> Self {
        self.scale(&int(factor))
    }

    pub fn half(&self) -> Self {
        self.scale(&ratio(1, 2))
    }

    /// Appends zero coordinates up to `dim`.
    pub fn extended(&self, dim: usize) -> Self {
        let mut coords = self.0.clone();
        coords.resize(dim, Rational::zero());
        Self(coords)
    }
}

impl fmt::Debug for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

impl From<Vec<Rational>> for RationalVector {
    fn from(coords: Vec<Rational>) -> Self {
        Self(coords)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $assign:ident, $assign_method:ident, $op:tt) => {
        impl $assign<&RationalVector> for RationalVector {
            fn $assign_method(&mut self, rhs: &RationalVector) {
                assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
                for (a, b) in self.0.iter_mut().zip(&rhs.0) {
                    *a $op b;
                }
            }
        }
        impl $assign<RationalVector> for RationalVector {
            fn $assign_method(&mut self, rhs: RationalVector) {
                self.$assign_method(&rhs);
            }
        }
        impl $trait<&RationalVector> for &RationalVector {
            type Output = RationalVector;
            fn $method(self, rhs: &RationalVector) -> RationalVector {
                let mut out = self.clone();
                out.$assign_method(rhs);
                out
            }
        }
        impl $trait<RationalVector> for RationalVector {
            type Output = RationalVector;
            fn $method(mut self, rhs: RationalVector) -> RationalVector {
                self.$assign_method(&rhs);
                self
            }
        }
        impl $trait<&RationalVector> for RationalVector {
            type Output = RationalVector;
            fn $method(mut self, rhs: &RationalVector) -> RationalVector {
                self.$assign_method(rhs);
                self
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign, +=);
forward_binop!(Sub, sub, SubAssign, sub_assign, -=);

impl Neg for RationalVector {
    type Output = RationalVector;
    fn neg(self) -> RationalVector {
        Self(self.0.into_iter().map(|x| -x).collect())
    }
}

impl Neg for &RationalVector {
    type Output = RationalVector;
    fn neg(self) -> RationalVector {
        -self.clone()
    }
}

impl Mul<&RationalVector> for &Rational {
    type Output = RationalVector;
    fn mul(self, rhs: &RationalVector) -> RationalVector {
        rhs.scale(self)
    }
}

impl Mul<RationalVector> for i64 {
    type Output = RationalVector;
    fn mul(self, rhs: RationalVector) -> RationalVector {
        rhs.scale_int(self)
    }
}

/// A labeled basis with a symmetric Gram matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticSpace {
    labels: Vec<String>,
    gram: Vec<Vec<Rational>>,
}

impl QuadraticSpace {
    pub fn new(labels: Vec<String>, gram: Vec<Vec<Rational>>) -> Result<Self> {
        let n = labels.len();
        if gram.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: gram.len(),
            });
        }
        if let Some(row) = gram.iter().find(|row| row.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: row.len(),
            });
        }
        for i in 0..n {
            for j in i + 1..n {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::AsymmetricGram { row: i, col: j });
                }
            }
        }
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Self { labels, gram })
    }

    pub fn diagonal<S: AsRef<str>>(labels: &[S], diag: &[i64]) -> Result<Self> {
        if labels.len() != diag.len() {
            return Err(Error::DimensionMismatch {
                expected: labels.len(),
                found: diag.len(),
            });
        }
        let n = diag.len();
        let gram = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            int(diag[i])
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        Self::new(labels.iter().map(|l| l.as_ref().to_owned()).collect(), gram)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_owned()))
    }

    pub fn basis_vector(&self, label: &str) -> Result<RationalVector> {
        Ok(RationalVector::unit(self.dim(), self.index_of(label)?))
    }

    /// Builds a vector from `(label, coefficient)` terms.
    pub fn combination(&self, terms: &[(&str, Rational)]) -> Result<RationalVector> {
        let mut v = RationalVector::zero(self.dim());
        for (label, c) in terms {
            let i = self.index_of(label)?;
            v.0[i] += c;
        }
        Ok(v)
    }

    fn check_dim(&self, v: &RationalVector) -> Result<()> {
        if v.dim() == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.dim(),
            })
        }
    }

    /// `vᵀ · gram · w`.
    pub fn inner(&self, v: &RationalVector, w: &RationalVector) -> Result<Rational> {
        self.check_dim(v)?;
        self.check_dim(w)?;
        let mut acc = Rational::zero();
        for (i, vi) in v.0.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, wj) in w.0.iter().enumerate() {
                if wj.is_zero() || self.gram[i][j].is_zero() {
                    continue;
                }
                acc += vi * &self.gram[i][j] * wj;
            }
        }
        Ok(acc)
    }

    pub fn norm(&self, v: &RationalVector) -> Result<Rational> {
        self.inner(v, v)
    }

    /// Gram matrix of a list of vectors.
    pub fn gram_of(&self, vectors: &[RationalVector]) -> Result<Vec<Vec<Rational>>> {
        vectors
            .iter()
            .map(|v| vectors.iter().map(|w| self.inner(v, w)).collect())
            .collect()
    }

    /// Same labels with every pairing multiplied by `factor`.
    pub fn rescaled(&self, factor: i64) -> Self {
        let f = int(factor);
        Self {
            labels: self.labels.clone(),
            gram: self
                .gram
                .iter()
                .map(|row| row.iter().map(|x| x * &f).collect())
                .collect(),
        }
    }

    /// Orthogonal direct sum with a new basis vector of the given norm.
    pub fn extended(&self, label: &str, norm: Rational) -> Result<Self> {
        let n = self.dim();
        let mut labels = self.labels.clone();
        labels.push(label.to_owned());
        let mut gram: Vec<Vec<Rational>> = self
            .gram
            .iter()
            .map(|row| {
                let mut r = row.clone();
                r.push(Rational::zero());
                r
            })
            .collect();
        let mut last = alloc::vec![Rational::zero(); n];
        last.push(norm);
        gram.push(last);
        Self::new(labels, gram)
    }
}

/// Finite abelian group `L*/L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscriminantGroup {
    /// Invariant factors greater than one, each dividing the next.
    pub invariant_factors: Vec<BigInt>,
    /// One dual-lattice vector per invariant factor whose class has that order.
    pub generator_lifts: Vec<RationalVector>,
}

impl DiscriminantGroup {
    pub fn order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }
}

/// The ℤ-span of a list of generators inside a quadratic space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SublatticeModel {
    space: QuadraticSpace,
    generators: Vec<RationalVector>,
    denominator: BigInt,
    hermite: Hermite,
}

impl SublatticeModel {
    pub fn new(space: QuadraticSpace, generators: Vec<RationalVector>) -> Result<Self> {
        for g in &generators {
            space.check_dim(g)?;
        }
        let denominator = generators
            .iter()
            .fold(BigInt::one(), |acc, g| acc.lcm(&g.denominator()));
        let scaled: Vec<Vec<BigInt>> = generators
            .iter()
            .map(|g| {
                g.0.iter()
                    .map(|x| (x * &denominator).to_integer())
                    .collect()
            })
            .collect();
        let hermite = normal_form::hermite(&scaled, space.dim());
        Ok(Self {
            space,
            generators,
            denominator,
            hermite,
        })
    }

    pub fn space(&self) -> &QuadraticSpace {
        &self.space
    }

    pub fn generators(&self) -> &[RationalVector] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.hermite.rows.len()
    }

    /// Common denominator `D` with `D · lattice ⊆ ℤⁿ`.
    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    /// Hermite ℤ-basis in ambient coordinates.
    pub fn basis(&self) -> Vec<RationalVector> {
        self.hermite
            .rows
            .iter()
            .map(|row| {
                RationalVector(
                    row.iter()
                        .map(|x| Rational::new(x.clone(), self.denominator.clone()))
                        .collect(),
                )
            })
            .collect()
    }

    /// Equivalent sublattice whose generators are the Hermite ℤ-basis.
    pub fn hnf_basis(&self) -> SublatticeModel {
        let basis = self.basis();
        // denominators of the basis may be smaller than self.denominator
        SublatticeModel::new(self.space.clone(), basis)
            .expect("basis vectors live in the same space")
    }

    /// Integer coordinates of `v` in the Hermite basis, if `v` is in the lattice.
    pub fn coordinates(&self, v: &RationalVector) -> Result<Option<Vec<BigInt>>> {
        self.space.check_dim(v)?;
        let mut scaled: Vec<BigInt> = Vec::with_capacity(v.dim());
        for x in &v.0 {
            let y = x * &self.denominator;
            if !y.is_integer() {
                return Ok(None);
            }
            scaled.push(y.to_integer());
        }
        Ok(self.solve_scaled(scaled))
    }

    /// Membership of `v` given `scaled = denominator · v` as integers.
    pub fn contains_scaled(&self, scaled: Vec<BigInt>) -> Result<bool> {
        if scaled.len() != self.space.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.space.dim(),
                found: scaled.len(),
            });
        }
        Ok(self.solve_scaled(scaled).is_some())
    }

    fn solve_scaled(&self, mut w: Vec<BigInt>) -> Option<Vec<BigInt>> {
        let mut coords = Vec::with_capacity(self.rank());
        let mut next = 0;
        for col in 0..w.len() {
            if next < self.hermite.pivots.len() && self.hermite.pivots[next] == col {
                let row = &self.hermite.rows[next];
                let (q, r) = w[col].div_rem(&row[col]);
                if !r.is_zero() {
                    return None;
                }
                if !q.is_zero() {
                    for (wi, ri) in w.iter_mut().zip(row).skip(col) {
                        if !ri.is_zero() {
                            *wi -= &q * ri;
                        }
                    }
                }
                coords.push(q);
                next += 1;
            } else if !w[col].is_zero() {
                return None;
            }
        }
        Some(coords)
    }

    /// Whether `v` is an integer combination of the generators.
    pub fn contains(&self, v: &RationalVector) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    /// Gram matrix of the Hermite ℤ-basis.
    pub fn basis_gram(&self) -> Vec<Vec<Rational>> {
        self.space
            .gram_of(&self.basis())
            .expect("basis vectors live in the same space")
    }

    pub fn determinant(&self) -> Rational {
        normal_form::determinant(&self.basis_gram())
    }

    /// Whether `⟨v, g⟩ ∈ ℤ` for every generator `g`.
    pub fn in_dual(&self, v: &RationalVector) -> Result<bool> {
        for g in &self.generators {
            if !self.space.inner(v, g)?.is_integer() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `L*/L` from the Smith normal form of the ℤ-basis Gram matrix.
    pub fn discriminant_group(&self) -> Result<DiscriminantGroup> {
        let basis = self.basis();
        let gram = self.space.gram_of(&basis)?;
        if normal_form::determinant(&gram).is_zero() {
            return Err(Error::DegenerateLattice);
        }
        if gram.iter().flatten().any(|x| !x.is_integer()) {
            return Err(Error::NonIntegralGram);
        }
        let gram: Vec<Vec<BigInt>> = gram
            .iter()
            .map(|row| row.iter().map(|x| x.to_integer()).collect())
            .collect();
        let smith = normal_form::smith(&gram);
        let mut invariant_factors = Vec::new();
        let mut generator_lifts = Vec::new();
        for (i, d) in smith.diagonal.iter().enumerate() {
            if d.is_one() {
                continue;
            }
            // the class of (row i of U)/d_i · basis has order d_i in L*/L
            let mut lift = RationalVector::zero(self.space.dim());
            for (u, b) in smith.left[i].iter().zip(&basis) {
                if !u.is_zero() {
                    lift += b.scale(&Rational::new(u.clone(), d.clone()));
                }
            }
            invariant_factors.push(d.clone());
            generator_lifts.push(lift);
        }
        Ok(DiscriminantGroup {
            invariant_factors,
            generator_lifts,
        })
    }

    /// Whether the linear map sending each ambient basis vector to its image
    /// preserves the pairing and restricts to a bijection of the lattice.
    ///
    /// `images` must define every ambient basis label. An image that sends a
    /// lattice vector outside the lattice yields `Ok(false)`.
    pub fn is_isometry(&self, images: &BTreeMap<String, RationalVector>) -> Result<bool> {
        let n = self.space.dim();
        let mut matrix = Vec::with_capacity(n);
        for label in &self.space.labels {
            let image = images
                .get(label)
                .ok_or_else(|| Error::UnknownLabel(label.clone()))?;
            self.space.check_dim(image)?;
            matrix.push(image.clone());
        }
        if let Some(extra) = images.keys().find(|k| self.space.index_of(k).is_err()) {
            return Err(Error::UnknownLabel(extra.clone()));
        }
        for i in 0..n {
            for j in i..n {
                if self.space.inner(&matrix[i], &matrix[j])? != self.space.gram[i][j] {
                    return Ok(false);
                }
            }
        }
        for b in self.basis() {
            if !self.contains(&apply_linear(&matrix, &b))? {
                return Ok(false);
            }
        }
        // f(L) ⊆ L has index |det f| when rank L is full.
        let rows: Vec<Vec<Rational>> = matrix.iter().map(|v| v.0.clone()).collect();
        if self.rank() == n {
            Ok(normal_form::determinant(&rows).abs().is_one())
        } else {
            // lower rank: f(L) ⊆ L already holds, so check L ⊆ f(L)
            let image_lattice = SublatticeModel::new(
                self.space.clone(),
                self.basis()
                    .iter()
                    .map(|b| apply_linear(&matrix, b))
                    .collect(),
            )?;
            for b in self.basis() {
                if !image_lattice.contains(&b)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

/// `Σ vᵢ · rows[i]`: image of `v` under the map with the given basis images.
pub fn apply_linear(rows: &[RationalVector], v: &RationalVector) -> RationalVector {
    let dim = rows.first().map_or(0, RationalVector::dim);
    let mut out = RationalVector::zero(dim);
    for (c, r) in v.0.iter().zip(rows) {
        if !c.is_zero() {
            out += r.scale(c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn plane(diag: &[i64]) -> QuadraticSpace {
        let labels: Vec<String> = (0..diag.len()).map(|i| alloc::format!("e{i}")).collect();
        QuadraticSpace::diagonal(&labels, diag).unwrap()
    }

    #[test]
    fn rejects_asymmetric_and_duplicate() {
        let labels = vec!["a".to_string(), "b".to_string()];
        let gram = vec![vec![int(1), int(2)], vec![int(3), int(1)]];
        assert_eq!(
            QuadraticSpace::new(labels, gram),
            Err(Error::AsymmetricGram { row: 0, col: 1 })
        );
        assert!(matches!(
            QuadraticSpace::diagonal(&["a", "a"], &[1, 1]),
            Err(Error::DuplicateLabel(_))
        ));
    }

    #[test]
    fn inner_checks_dimensions() {
        let s = plane(&[1, 1]);
        let err = s.inner(&RationalVector::zero(2), &RationalVector::zero(3));
        assert_eq!(
            err,
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn unimodular_lattice_has_trivial_discriminant() {
        let s = plane(&[1, 1]);
        let lat = SublatticeModel::new(
            s,
            vec![
                RationalVector::from_ints(&[1, 0]),
                RationalVector::from_ints(&[0, 1]),
            ],
        )
        .unwrap();
        assert!(lat.discriminant_group().unwrap().is_trivial());
    }

    #[test]
    fn degenerate_lattice_is_an_error() {
        let s = plane(&[1, 0]);
        let lat = SublatticeModel::new(
            s,
            vec![
                RationalVector::from_ints(&[1, 0]),
                RationalVector::from_ints(&[0, 1]),
            ],
        )
        .unwrap();
        assert_eq!(lat.discriminant_group(), Err(Error::DegenerateLattice));
    }

    #[test]
    fn identity_generators_are_already_reduced() {
        let s = plane(&[1, 1, 1]);
        let gens: Vec<_> = (0..3).map(|i| RationalVector::unit(3, i)).collect();
        let lat = SublatticeModel::new(s, gens.clone()).unwrap();
        assert_eq!(lat.hnf_basis().generators(), &gens[..]);
    }

    #[test]
    fn duplicated_rows_collapse() {
        let s = plane(&[1, 1, 1]);
        let v = RationalVector::from_ints(&[1, 2, 3]);
        let lat = SublatticeModel::new(s, vec![v.clone(), v.clone()]).unwrap();
        assert_eq!(lat.rank(), 1);
        assert_eq!(lat.hnf_basis().generators(), &[v][..]);
    }

    #[test]
    fn half_integer_membership() {
        let s = plane(&[-2, -2]);
        let lat = SublatticeModel::new(
            s,
            vec![
                RationalVector::from_ints(&[1, 0]),
                RationalVector::new(vec![ratio(1, 2), ratio(1, 2)]),
            ],
        )
        .unwrap();
        assert!(lat.contains(&RationalVector::from_ints(&[0, 1])).unwrap());
        assert!(lat.contains(&RationalVector::zero(2)).unwrap());
        assert!(!lat
            .contains(&RationalVector::new(vec![ratio(1, 2), int(0)]))
            .unwrap());
        assert!(!lat
            .contains(&RationalVector::new(vec![ratio(1, 4), ratio(1, 4)]))
            .unwrap());
    }

    #[test]
    fn discriminant_lifts_have_stated_order() {
        // A2 root lattice: discriminant ℤ/3
        let labels = vec!["a".to_string(), "b".to_string()];
        let gram = vec![vec![int(2), int(-1)], vec![int(-1), int(2)]];
        let s = QuadraticSpace::new(labels, gram).unwrap();
        let lat = SublatticeModel::new(
            s,
            vec![
                RationalVector::from_ints(&[1, 0]),
                RationalVector::from_ints(&[0, 1]),
            ],
        )
        .unwrap();
        let d = lat.discriminant_group().unwrap();
        assert_eq!(d.invariant_factors, vec![BigInt::from(3)]);
        let lift = &d.generator_lifts[0];
        assert!(lat.in_dual(lift).unwrap());
        assert!(!lat.contains(lift).unwrap());
        assert!(lat.contains(&lift.scale_int(3)).unwrap());
    }

    #[test]
    fn swap_of_unequal_norms_is_not_isometry() {
        let s = plane(&[4, -2]);
        let lat = SublatticeModel::new(
            s,
            vec![
                RationalVector::from_ints(&[1, 0]),
                RationalVector::from_ints(&[0, 1]),
            ],
        )
        .unwrap();
        let mut images = BTreeMap::new();
        images.insert("e0".to_string(), RationalVector::from_ints(&[0, 1]));
        images.insert("e1".to_string(), RationalVector::from_ints(&[1, 0]));
        assert!(!lat.is_isometry(&images).unwrap());
        images.insert("e0".to_string(), RationalVector::from_ints(&[1, 0]));
        images.insert("e1".to_string(), RationalVector::from_ints(&[0, 1]));
        assert!(lat.is_isometry(&images).unwrap());
        images.remove("e1");
        assert!(matches!(
            lat.is_isometry(&images),
            Err(Error::UnknownLabel(_))
        ));
    }

    #[test]
    fn isometry_must_preserve_the_lattice() {
        // x ↦ -x on the second axis of ℤ ⊕ 2ℤ keeps norms but the map
        // (x, y) ↦ (y, x) on diag(1,1) moves 2ℤ-sublattice off itself
        let s = plane(&[1, 1]);
        let lat = SublatticeModel::new(
            s,
            vec![
                RationalVector::from_ints(&[1, 0]),
                RationalVector::from_ints(&[0, 2]),
            ],
        )
        .unwrap();
        let mut images = BTreeMap::new();
        images.insert("e0".to_string(), RationalVector::from_ints(&[0, 1]));
        images.insert("e1".to_string(), RationalVector::from_ints(&[1, 0]));
        assert!(!lat.is_isometry(&images).unwrap());
        images.insert("e0".to_string(), RationalVector::from_ints(&[1, 0]));
        images.insert("e1".to_string(), RationalVector::from_ints(&[0, -1]));
        assert!(lat.is_isometry(&images).unwrap());
    }
}
