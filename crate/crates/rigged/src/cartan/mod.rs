//! Cartan data: generalized Cartan matrices, gamma factors, type
//! classification, pairings, and the type registry.

pub mod folding;
pub mod registry;
pub mod roots;

use std::collections::BTreeMap;
use std::fmt;

use num::rational::Ratio;
use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::weight::Weight;

pub use registry::build_cartan;

/// Dynkin node identifier. Named families use Bourbaki numbering with the
/// affine node labeled 0; explicit matrices default to 0-based labels.
pub type Label = i64;

/// Classification of a symmetrizable generalized Cartan matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TypeClass {
    Finite,
    Affine,
    Indefinite,
}

impl fmt::Display for TypeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeClass::Finite => write!(f, "finite"),
            TypeClass::Affine => write!(f, "affine"),
            TypeClass::Indefinite => write!(f, "indefinite"),
        }
    }
}

/// A symmetrizable generalized Cartan matrix with node labels and the
/// positive scaling factors used in the vacancy-number formula.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanDatum {
    labels: Vec<Label>,
    index: BTreeMap<Label, usize>,
    matrix: Vec<Vec<i64>>,
    gamma: Vec<i64>,
    symmetrizer: Vec<i64>,
    class: TypeClass,
    name: Option<String>,
}

impl CartanDatum {
    /// Builds a datum from an explicit matrix. `gamma` defaults to all ones;
    /// for symmetric matrices it must be all ones.
    pub fn from_matrix(
        labels: Vec<Label>,
        matrix: Vec<Vec<i64>>,
        gamma: Option<Vec<i64>>,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidCartan("empty matrix".into()));
        }
        if matrix.len() != n || matrix.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidCartan(format!(
                "expected a {n}x{n} matrix matching {n} labels"
            )));
        }
        let mut index = BTreeMap::new();
        for (i, &l) in labels.iter().enumerate() {
            if index.insert(l, i).is_some() {
                return Err(Error::InvalidCartan(format!("duplicate label {l}")));
            }
        }
        for i in 0..n {
            if matrix[i][i] != 2 {
                return Err(Error::InvalidCartan(format!(
                    "A[{0}][{0}] = {1}, expected 2",
                    labels[i], matrix[i][i]
                )));
            }
            for j in 0..n {
                if i != j && matrix[i][j] > 0 {
                    return Err(Error::InvalidCartan(format!(
                        "A[{}][{}] = {} > 0 off the diagonal",
                        labels[i], labels[j], matrix[i][j]
                    )));
                }
                if i != j && (matrix[i][j] == 0) != (matrix[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "zero pattern not symmetric at ({}, {})",
                        labels[i], labels[j]
                    )));
                }
            }
        }
        let symmetrizer = compute_symmetrizer(&labels, &matrix)?;
        let symmetric = (0..n).all(|i| (0..n).all(|j| matrix[i][j] == matrix[j][i]));
        let gamma = match gamma {
            None => vec![1; n],
            Some(g) => {
                if g.len() != n {
                    return Err(Error::InvalidCartan("gamma length mismatch".into()));
                }
                if let Some(&bad) = g.iter().find(|&&x| x < 1) {
                    return Err(Error::InvalidCartan(format!("gamma entry {bad} < 1")));
                }
                if symmetric && g.iter().any(|&x| x != 1) {
                    return Err(Error::InvalidCartan(
                        "gamma must be all ones for a symmetric matrix".into(),
                    ));
                }
                g
            }
        };
        let class = classify(&matrix);
        Ok(CartanDatum {
            labels,
            index,
            matrix,
            gamma,
            symmetrizer,
            class,
            name: None,
        })
    }

    pub(crate) fn named(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    /// Replaces the gamma factors, keeping everything else.
    pub fn with_gamma(&self, gamma: Vec<i64>) -> Result<Self> {
        let mut d = CartanDatum::from_matrix(self.labels.clone(), self.matrix.clone(), Some(gamma))?;
        d.name = self.name.clone();
        Ok(d)
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn class(&self) -> TypeClass {
        self.class
    }

    pub fn is_finite(&self) -> bool {
        self.class == TypeClass::Finite
    }

    /// Simply-laced means the matrix is symmetric.
    pub fn is_simply_laced(&self) -> bool {
        let n = self.rank();
        (0..n).all(|i| (0..n).all(|j| self.matrix[i][j] == self.matrix[j][i]))
    }

    pub fn position(&self, a: Label) -> Result<usize> {
        self.index.get(&a).copied().ok_or(Error::UnknownLabel(a))
    }

    pub fn has_label(&self, a: Label) -> bool {
        self.index.contains_key(&a)
    }

    /// Cartan matrix entry `<h_a, alpha_b>` by label.
    pub fn a(&self, a: Label, b: Label) -> i64 {
        let (i, j) = (self.index[&a], self.index[&b]);
        self.matrix[i][j]
    }

    pub fn gamma_of(&self, a: Label) -> i64 {
        self.gamma[self.index[&a]]
    }

    pub fn gammas(&self) -> impl Iterator<Item = (Label, i64)> + '_ {
        self.labels.iter().copied().zip(self.gamma.iter().copied())
    }

    /// Minimal positive integer symmetrizer: `d_a * A[a][b] = d_b * A[b][a]`.
    pub fn symmetrizer_of(&self, a: Label) -> i64 {
        self.symmetrizer[self.index[&a]]
    }

    pub fn neighbors(&self, a: Label) -> Vec<Label> {
        let i = self.index[&a];
        self.labels
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i && self.matrix[i][j] != 0)
            .map(|(_, &l)| l)
            .collect()
    }

    /// The canonical pairing `<h_a, w>`.
    pub fn pairing(&self, a: Label, w: &Weight) -> Result<i64> {
        self.position(a)?;
        let mut value = w.lambda_coeff(a);
        for (&b, &c) in &w.alpha {
            self.position(b)?;
            value += self.a(a, b) * c;
        }
        Ok(value)
    }

    /// Rewrites a finite-type weight with zero root part, preserving all
    /// pairings. Rejected outside finite type, where the fundamental weights
    /// do not span.
    pub fn canonicalize_weight(&self, w: &Weight) -> Result<Weight> {
        if !self.is_finite() {
            return Err(Error::NotFiniteType(self.class.to_string()));
        }
        for &b in w.lambda.keys().chain(w.alpha.keys()) {
            self.position(b)?;
        }
        let mut out = Weight::zero();
        for &a in &self.labels {
            out.add_lambda(a, self.pairing(a, w)?);
        }
        Ok(out)
    }

    /// Dominance: all pairings nonnegative.
    pub fn check_dominant(&self, w: &Weight) -> Result<()> {
        for &a in &self.labels {
            let v = self.pairing(a, w)?;
            if v < 0 {
                return Err(Error::NotDominant { label: a, value: v });
            }
        }
        Ok(())
    }

    /// Weights of the named display form `rho = sum_a La_a`.
    pub fn rho(&self) -> Weight {
        Weight::from_lambda(self.labels.iter().map(|&a| (a, 1)))
    }

    /// Connected components of the Dynkin diagram, as label sets.
    pub fn components(&self) -> Vec<Vec<Label>> {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for j in 0..n {
                    if !seen[j] && self.matrix[i][j] != 0 {
                        seen[j] = true;
                        comp.push(j);
                        stack.push(j);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp.into_iter().map(|i| self.labels[i]).collect());
        }
        comps
    }
}

impl fmt::Display for CartanDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.name {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "matrix(rank {})", self.rank()),
        }
    }
}

/// Finds positive `d_a` with `d_a A[a][b] = d_b A[b][a]`, scaled to minimal
/// positive integers per connected component.
fn compute_symmetrizer(labels: &[Label], matrix: &[Vec<i64>]) -> Result<Vec<i64>> {
    let n = labels.len();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Ratio::one());
        let mut stack = vec![start];
        let mut comp = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if j == i || matrix[i][j] == 0 {
                    continue;
                }
                // d_j = d_i * A[i][j] / A[j][i]
                let prop = d[i].unwrap() * Ratio::new(matrix[i][j], matrix[j][i]);
                match d[j] {
                    None => {
                        d[j] = Some(prop);
                        stack.push(j);
                        comp.push(j);
                    }
                    Some(existing) => {
                        if existing != prop {
                            return Err(Error::NotSymmetrizable {
                                a: labels[i],
                                b: labels[j],
                            });
                        }
                    }
                }
            }
        }
        // Rescale the component to minimal positive integers.
        let lcm_den = comp
            .iter()
            .map(|&i| *d[i].unwrap().denom())
            .fold(1i64, num::integer::lcm);
        let nums: Vec<i64> = comp
            .iter()
            .map(|&i| (d[i].unwrap() * Ratio::from_integer(lcm_den)).to_integer())
            .collect();
        let g = nums.iter().copied().fold(0i64, num::integer::gcd);
        for (&i, &v) in comp.iter().zip(&nums) {
            d[i] = Some(Ratio::from_integer(v / g));
        }
    }
    // Verify every pair, including pairs the spanning walk did not traverse.
    for i in 0..n {
        for j in 0..n {
            if d[i].unwrap() * Ratio::from_integer(matrix[i][j])
                != d[j].unwrap() * Ratio::from_integer(matrix[j][i])
            {
                return Err(Error::NotSymmetrizable {
                    a: labels[i],
                    b: labels[j],
                });
            }
        }
    }
    Ok(d.into_iter().map(|r| r.unwrap().to_integer()).collect())
}

/// Determinant of the leading `k x k` block, exact (Bareiss).
fn leading_minor(matrix: &[Vec<i64>], k: usize) -> i128 {
    let mut a: Vec<Vec<i128>> = matrix[..k]
        .iter()
        .map(|row| row[..k].iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for i in 0..k {
        if a[i][i] == 0 {
            let Some(p) = (i + 1..k).find(|&r| a[r][i] != 0) else {
                return 0;
            };
            a.swap(i, p);
            sign = -sign;
        }
        for r in i + 1..k {
            for c in i + 1..k {
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) / prev;
            }
            a[r][i] = 0;
        }
        prev = a[i][i];
    }
    sign * a[k - 1][k - 1]
}

/// Kernel basis of the matrix over the rationals.
fn rational_kernel(matrix: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    let n = matrix.len();
    let mut a: Vec<Vec<BigRational>> = matrix
        .iter()
        .map(|row| {
            row.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col].clone();
        for c in 0..n {
            a[row][c] = &a[row][c] / &inv;
        }
        for r in 0..n {
            if r != row && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in 0..n {
                    a[r][c] = &a[r][c] - &factor * &a[row][c];
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == n {
            break;
        }
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free {
        let mut v = vec![BigRational::zero(); n];
        v[fc] = BigRational::one();
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -a[r][fc].clone();
        }
        basis.push(v);
    }
    basis
}

fn is_connected(matrix: &[Vec<i64>]) -> bool {
    let n = matrix.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if !seen[j] && matrix[i][j] != 0 {
                seen[j] = true;
                count += 1;
                stack.push(j);
            }
        }
    }
    count == n
}

/// Finite iff the symmetrization is positive definite; affine iff the matrix
/// is connected, singular, and has a strictly positive kernel vector;
/// indefinite otherwise.
fn classify(matrix: &[Vec<i64>]) -> TypeClass {
    let n = matrix.len();
    if (1..=n).all(|k| leading_minor(matrix, k) > 0) {
        return TypeClass::Finite;
    }
    if leading_minor(matrix, n) == 0 && is_connected(matrix) {
        let kernel = rational_kernel(matrix);
        if kernel.len() == 1 {
            let v = &kernel[0];
            let all_pos = v.iter().all(|x| x.is_positive());
            let all_neg = v.iter().all(|x| x.is_negative());
            if all_pos || all_neg {
                return TypeClass::Affine;
            }
        }
    }
    TypeClass::Indefinite
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::registry::build_cartan;

    #[test]
    fn rejects_bad_matrices() {
        let err = CartanDatum::from_matrix(vec![1, 2], vec![vec![2, 1], vec![1, 2]], None);
        assert!(err.is_err());
        let err = CartanDatum::from_matrix(vec![1, 2], vec![vec![2, -1], vec![0, 2]], None);
        assert!(matches!(err, Err(Error::InvalidCartan(_))));
        let err = CartanDatum::from_matrix(vec![1], vec![vec![3]], None);
        assert!(err.is_err());
    }

    #[test]
    fn rejects_non_symmetrizable() {
        // Directed triangle with mismatched bond ratios around the cycle.
        let m = vec![vec![2, -1, -2], vec![-2, 2, -1], vec![-1, -2, 2]];
        let err = CartanDatum::from_matrix(vec![0, 1, 2], m, None);
        assert!(matches!(err, Err(Error::NotSymmetrizable { .. })));
    }

    #[test]
    fn symmetrizer_values() {
        let c2 = build_cartan("C2").unwrap();
        // alpha_1 short, alpha_2 long
        assert_eq!(c2.symmetrizer_of(1), 1);
        assert_eq!(c2.symmetrizer_of(2), 2);
        let g2 = build_cartan("G2").unwrap();
        assert_eq!(g2.symmetrizer_of(1), 1);
        assert_eq!(g2.symmetrizer_of(2), 3);
        let b3 = build_cartan("B3").unwrap();
        assert_eq!(
            (1..=3).map(|a| b3.symmetrizer_of(a)).collect::<Vec<_>>(),
            vec![2, 2, 1]
        );
    }

    #[test]
    fn classification_by_family() {
        for name in ["A1", "A2", "B2", "C3", "D4", "E6", "F4", "G2"] {
            assert_eq!(build_cartan(name).unwrap().class(), TypeClass::Finite, "{name}");
        }
        for name in ["A1~", "A2~", "B3~", "C2~", "D4~", "G2~", "A2^2", "D3^2", "E6^2", "D4^3"] {
            assert_eq!(build_cartan(name).unwrap().class(), TypeClass::Affine, "{name}");
        }
        let h14 = build_cartan(
            "matrix:[[2,-1,-1,-1],[-1,2,-1,-1],[-1,-1,2,-1],[-1,-1,-1,2]]",
        )
        .unwrap();
        assert_eq!(h14.class(), TypeClass::Indefinite);
    }

    #[test]
    fn pairing_examples() {
        let a2 = build_cartan("A2").unwrap();
        // <h_a, La_b> = delta_ab
        assert_eq!(a2.pairing(1, &Weight::fundamental(1)).unwrap(), 1);
        assert_eq!(a2.pairing(2, &Weight::fundamental(1)).unwrap(), 0);
        // <h_1, alpha_2> = A[1][2]
        assert_eq!(a2.pairing(1, &Weight::simple_root(2)).unwrap(), -1);

        let d5 = build_cartan("D5").unwrap();
        let w = Weight::from_lambda([(1, 2), (2, 1), (3, 1)])
            + Weight::from_alpha([(1, -4), (2, -5), (3, -6), (4, -3), (5, -3)]);
        let pairings: Vec<i64> = (1..=5).map(|a| d5.pairing(a, &w).unwrap()).collect();
        assert_eq!(pairings, vec![-1, 1, 0, 0, 0]);
    }

    #[test]
    fn canonicalize_examples() {
        let d5 = build_cartan("D5").unwrap();
        let w = Weight::from_lambda([(1, 2), (2, 1), (3, 1)])
            + Weight::from_alpha([(1, -4), (2, -5), (3, -6), (4, -3), (5, -3)]);
        let canon = d5.canonicalize_weight(&w).unwrap();
        assert_eq!(canon, Weight::from_lambda([(1, -1), (2, 1)]));

        // A pure fundamental-weight combination is fixed.
        let v = Weight::from_lambda([(1, 3), (4, 2)]);
        assert_eq!(d5.canonicalize_weight(&v).unwrap(), v);

        // -La_1 + 2 La_3 - La_4 - La_5 equals -La_1 + La_2 + alpha_3.
        let lhs = Weight::from_lambda([(1, -1), (3, 2), (4, -1), (5, -1)]);
        let rhs = Weight::from_lambda([(1, -1), (2, 1)]) + Weight::simple_root(3);
        assert_eq!(
            d5.canonicalize_weight(&lhs).unwrap(),
            d5.canonicalize_weight(&rhs).unwrap()
        );

        let a2t = build_cartan("A2~").unwrap();
        assert!(a2t.canonicalize_weight(&Weight::fundamental(0)).is_err());
    }

    #[test]
    fn components_split() {
        // A1 x A1 as a 2x2 block-diagonal matrix.
        let m = vec![vec![2, 0], vec![0, 2]];
        let d = CartanDatum::from_matrix(vec![1, 2], m, None).unwrap();
        assert_eq!(d.components().len(), 2);
        assert_eq!(d.class(), TypeClass::Finite);
    }
}
