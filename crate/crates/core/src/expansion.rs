//! Shadowing systems of the 3-dimensional 0-skeleton problem with `V`
//! vertices, and their quadratic forms.
//!
//! Vertices are labelled by decreasing distance from the centre of mass, so
//! in a mono-unstable configuration every vertex `i ≥ 2` is shadowed by some
//! `j(i) < i`. A [`ShadowSystem`] fixes that choice. Its inequalities are
//! `Q_i(r) = Σ_k r_ik² - Σ_k r_ik r_j(i),k ≤ 0` for `i = 2..V`, under the
//! normalisation `r_1 = (1,0,0)`, `r_23 = 0` and the balance condition
//! `r_V = -(r_1 + … + r_{V-1})`. What remains are `3V-7` free coordinates.
//!
//! Quadratic forms use the convention `f(x) = xᵀAx + b·x + c0`, so the
//! Hessian is `2A`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ratcore::{eval_quadratic, RatError, RatMatrix, RatVector, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExpansionError {
    #[error("V = {0} is too small (need at least {1})")]
    TooFewVertices(usize, usize),
    #[error("expected {expected} shadower choices j(2..V), found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("j({i}) = {j} is outside 1..={max}")]
    ShadowerOutOfRange { i: usize, j: usize, max: usize },
    #[error("system id {id} is out of range for V = {v} ({count} systems)")]
    IdOutOfRange { v: usize, id: usize, count: usize },
    #[error("coordinate r_({i},{k}) is not a free variable for V = {v}")]
    NotFree { i: usize, k: usize, v: usize },
    #[error("coefficient c_{index} = {value} is not positive")]
    NonPositiveCoefficient { index: usize, value: u64 },
    #[error("expected {expected} coefficients c_2..c_V, found {found}")]
    WrongCoefficientCount { expected: usize, found: usize },
    #[error(transparent)]
    Rational(#[from] RatError),
}

/// Number of systems, `(V-1)!`.
pub fn system_count(v: usize) -> usize {
    (2..v).product()
}

/// One choice of shadowing vertex `j(i) ∈ 1..i-1` for every `i = 2..V`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SystemRepr", into = "SystemRepr")]
pub struct ShadowSystem {
    v: usize,
    /// `j[i-2] = j(i)`, so `j[0] = 1` always.
    j: Vec<usize>,
    id: usize,
}

#[derive(Serialize, Deserialize)]
struct SystemRepr {
    #[serde(rename = "V")]
    v: usize,
    j: Vec<usize>,
}

impl TryFrom<SystemRepr> for ShadowSystem {
    type Error = ExpansionError;
    fn try_from(r: SystemRepr) -> Result<Self, Self::Error> {
        ShadowSystem::new(r.v, r.j)
    }
}

impl From<ShadowSystem> for SystemRepr {
    fn from(s: ShadowSystem) -> Self {
        SystemRepr { v: s.v, j: s.j }
    }
}

impl ShadowSystem {
    /// `choices` lists `j(2), …, j(V)`.
    pub fn new(v: usize, choices: Vec<usize>) -> Result<Self, ExpansionError> {
        if v < 3 {
            return Err(ExpansionError::TooFewVertices(v, 3));
        }
        if choices.len() != v - 1 {
            return Err(ExpansionError::WrongLength { expected: v - 1, found: choices.len() });
        }
        let mut id = 0;
        for (offset, &j) in choices.iter().enumerate() {
            let i = offset + 2;
            if j < 1 || j > i - 1 {
                return Err(ExpansionError::ShadowerOutOfRange { i, j, max: i - 1 });
            }
            // mixed radix over j(3..V), j(V) least significant
            if i >= 3 {
                id = id * (i - 1) + (j - 1);
            }
        }
        Ok(ShadowSystem { v, j: choices, id })
    }

    /// Same as [`ShadowSystem::new`] with `j(2) = 1` implied; `tail` lists
    /// `j(3), …, j(V)` as in the certificate tables.
    pub fn from_tail(v: usize, tail: &[usize]) -> Result<Self, ExpansionError> {
        let mut choices = Vec::with_capacity(tail.len() + 1);
        choices.push(1);
        choices.extend_from_slice(tail);
        if v >= 3 && tail.len() != v - 2 {
            return Err(ExpansionError::WrongLength { expected: v - 2, found: tail.len() });
        }
        ShadowSystem::new(v, choices)
    }

    /// The system with rank `id` in canonical order.
    pub fn from_id(v: usize, id: usize) -> Result<Self, ExpansionError> {
        if v < 3 {
            return Err(ExpansionError::TooFewVertices(v, 3));
        }
        let count = system_count(v);
        if id >= count {
            return Err(ExpansionError::IdOutOfRange { v, id, count });
        }
        let mut rest = id;
        let mut tail = vec![0; v - 2];
        for i in (3..=v).rev() {
            tail[i - 3] = rest % (i - 1) + 1;
            rest /= i - 1;
        }
        ShadowSystem::from_tail(v, &tail)
    }

    /// `j(i) = i - 1` for every `i`.
    pub fn chain(v: usize) -> Result<Self, ExpansionError> {
        ShadowSystem::new(v, (1..v).collect())
    }

    pub fn vertices(&self) -> usize {
        self.v
    }

    /// 0-based rank in canonical order.
    pub fn id(&self) -> usize {
        self.id
    }

    /// `j(2), …, j(V)`.
    pub fn choices(&self) -> &[usize] {
        &self.j
    }

    /// `j(3), …, j(V)`.
    pub fn tail(&self) -> &[usize] {
        &self.j[1..]
    }

    /// `j(i)` for `2 ≤ i ≤ V`.
    pub fn shadower(&self, i: usize) -> usize {
        self.j[i - 2]
    }
}

impl fmt::Debug for ShadowSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ShadowSystem(V={}, j={:?}, id={})", self.v, self.j, self.id)
    }
}

impl fmt::Display for ShadowSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tail: Vec<String> = self.tail().iter().map(ToString::to_string).collect();
        write!(f, "({})", tail.join(","))
    }
}

/// All `(V-1)!` systems, lexicographic in `(j(3), …, j(V))` with `j(V)`
/// varying fastest.
pub fn enumerate_systems(v: usize) -> Result<Vec<ShadowSystem>, ExpansionError> {
    if v < 3 {
        return Err(ExpansionError::TooFewVertices(v, 3));
    }
    (0..system_count(v)).map(|id| ShadowSystem::from_id(v, id)).collect()
}

/// Flat numbering of the free coordinates `r_ik`: `(2,1) → 0`, `(2,2) → 1`,
/// then `(i,k) → 2 + 3(i-3) + (k-1)` for `3 ≤ i ≤ V-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VarIndex {
    v: usize,
}

impl VarIndex {
    pub fn new(v: usize) -> Result<Self, ExpansionError> {
        if v < 3 {
            return Err(ExpansionError::TooFewVertices(v, 3));
        }
        Ok(VarIndex { v })
    }

    /// `3V - 7`.
    pub fn len(&self) -> usize {
        3 * self.v - 7
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn index(&self, i: usize, k: usize) -> Result<usize, ExpansionError> {
        let not_free = ExpansionError::NotFree { i, k, v: self.v };
        match (i, k) {
            (2, 1 | 2) => Ok(k - 1),
            _ if i >= 3 && i < self.v && (1..=3).contains(&k) => Ok(2 + 3 * (i - 3) + (k - 1)),
            _ => Err(not_free),
        }
    }

    /// Inverse of [`VarIndex::index`].
    pub fn coordinate(&self, idx: usize) -> Option<(usize, usize)> {
        match idx {
            _ if idx >= self.len() => None,
            0 | 1 => Some((2, idx + 1)),
            _ => Some((3 + (idx - 2) / 3, (idx - 2) % 3 + 1)),
        }
    }
}

pub fn var_index(i: usize, k: usize, v: usize) -> Result<usize, ExpansionError> {
    VarIndex::new(v)?.index(i, k)
}

/// `lin·x + constant` over the free coordinates.
#[derive(Clone, Debug)]
struct Affine {
    lin: Vec<Rational>,
    constant: Rational,
}

impl Affine {
    fn zero(n: usize) -> Self {
        Affine { lin: vec![Rational::zero(); n], constant: Rational::zero() }
    }

    fn sub_assign(&mut self, other: &Affine) {
        for (a, b) in self.lin.iter_mut().zip(&other.lin) {
            *a -= b;
        }
        self.constant -= &other.constant;
    }
}

/// Coordinate `r_ik` (1-based) as an affine expression after fixing
/// `r_1 = (1,0,0)`, `r_23 = 0` and eliminating `r_V`.
fn coordinate(vars: &VarIndex, i: usize, k: usize) -> Affine {
    let n = vars.len();
    let mut e = Affine::zero(n);
    if i == 1 {
        if k == 1 {
            e.constant = Rational::one();
        }
    } else if i == vars.v {
        for l in 1..vars.v {
            e.sub_assign(&coordinate(vars, l, k));
        }
    } else if let Ok(idx) = vars.index(i, k) {
        e.lin[idx] = Rational::one();
    }
    e
}

/// `f(x) = xᵀAx + b·x + c0` with `A` symmetric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticForm {
    pub a: RatMatrix,
    pub b: RatVector,
    pub c0: Rational,
}

impl QuadraticForm {
    pub fn zero(n: usize) -> Self {
        QuadraticForm { a: RatMatrix::zeros(n, n), b: RatVector::zeros(n), c0: Rational::zero() }
    }

    pub fn n(&self) -> usize {
        self.b.len()
    }

    pub fn eval(&self, x: &RatVector) -> Result<Rational, RatError> {
        eval_quadratic(&self.a, &self.b, &self.c0, x)
    }

    /// `self += k * other`.
    pub fn add_scaled(&mut self, k: &Rational, other: &QuadraticForm) -> Result<(), RatError> {
        self.a.add_scaled(k, &other.a)?;
        self.b = self.b.checked_add(&other.b.scale(k))?;
        self.c0 += k * &other.c0;
        Ok(())
    }

    pub fn scale(&self, k: &Rational) -> QuadraticForm {
        QuadraticForm { a: self.a.scale(k), b: self.b.scale(k), c0: &self.c0 * k }
    }

    /// `self += sign * p(x) q(x)`, symmetrising the quadratic part.
    fn add_product(&mut self, sign: &Rational, p: &Affine, q: &Affine) {
        let half = Rational::new(1, 2).expect("nonzero");
        let n = self.n();
        for r in 0..n {
            if p.lin[r].is_zero() && q.lin[r].is_zero() {
                continue;
            }
            for c in 0..n {
                let t = &p.lin[r] * &q.lin[c] + &p.lin[c] * &q.lin[r];
                if !t.is_zero() {
                    self.a[(r, c)] += sign * &half * t;
                }
            }
        }
        for r in 0..n {
            let t = &p.constant * &q.lin[r] + &q.constant * &p.lin[r];
            if !t.is_zero() {
                self.b[r] += sign * t;
            }
        }
        self.c0 += sign * &p.constant * &q.constant;
    }
}

/// Left-hand side `Q_i` of the inequality for vertex `i` (2 ≤ i ≤ V).
pub fn inequality_form(sys: &ShadowSystem, i: usize) -> QuadraticForm {
    assert!((2..=sys.vertices()).contains(&i), "vertex {i} has no inequality");
    let vars = VarIndex { v: sys.vertices() };
    let j = sys.shadower(i);
    let plus = Rational::one();
    let minus = -Rational::one();
    let mut form = QuadraticForm::zero(vars.len());
    for k in 1..=3 {
        let ri = coordinate(&vars, i, k);
        let rj = coordinate(&vars, j, k);
        form.add_product(&plus, &ri, &ri);
        form.add_product(&minus, &ri, &rj);
    }
    form
}

/// `Q_2, …, Q_V` in order.
pub fn inequality_forms(sys: &ShadowSystem) -> Vec<QuadraticForm> {
    (2..=sys.vertices()).map(|i| inequality_form(sys, i)).collect()
}

pub(crate) fn check_coefficients(v: usize, coeffs: &[u64]) -> Result<(), ExpansionError> {
    if coeffs.len() != v - 1 {
        return Err(ExpansionError::WrongCoefficientCount { expected: v - 1, found: coeffs.len() });
    }
    if let Some(pos) = coeffs.iter().position(|&c| c == 0) {
        return Err(ExpansionError::NonPositiveCoefficient { index: pos + 2, value: 0 });
    }
    Ok(())
}

/// `Σ c_i Q_i` over precomputed inequality forms.
pub fn combine_forms(forms: &[QuadraticForm], coeffs: &[u64]) -> QuadraticForm {
    let n = forms.first().map_or(0, QuadraticForm::n);
    let mut f = QuadraticForm::zero(n);
    for (form, &c) in forms.iter().zip(coeffs) {
        f.add_scaled(&Rational::from(c), form).expect("forms share a dimension");
    }
    f
}

/// The weighted sum `f = Σ_{i=2}^{V} c_i Q_i`; `coeffs` lists `c_2..c_V`.
pub fn assemble_f(sys: &ShadowSystem, coeffs: &[u64]) -> Result<QuadraticForm, ExpansionError> {
    check_coefficients(sys.vertices(), coeffs)?;
    Ok(combine_forms(&inequality_forms(sys), coeffs))
}

/// Full vertex list `r_1..r_V` encoded by a point `x` of the free
/// coordinates.
pub fn reconstruct_vertices(v: usize, x: &RatVector) -> Result<Vec<RatVector>, ExpansionError> {
    let vars = VarIndex::new(v)?;
    if x.len() != vars.len() {
        return Err(RatError::DimensionMismatch { expected: vars.len(), found: x.len() }.into());
    }
    Ok((1..=v)
        .map(|i| {
            (1..=3)
                .map(|k| {
                    let e = coordinate(&vars, i, k);
                    e.lin.iter().zip(x).map(|(a, b)| a * b).sum::<Rational>() + &e.constant
                })
                .collect()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn counts_and_order() {
        let v4 = enumerate_systems(4).unwrap();
        assert_eq!(v4.len(), 6);
        assert_eq!(v4[0].tail(), &[1, 1]);
        assert_eq!(v4[1].tail(), &[1, 2]);
        assert_eq!(v4[5].tail(), &[2, 3]);
        assert_eq!(enumerate_systems(3).unwrap().len(), 2);
        assert_eq!(enumerate_systems(7).unwrap().len(), 720);
        assert_eq!(system_count(8), 5040);
        for (id, s) in enumerate_systems(6).unwrap().iter().enumerate() {
            assert_eq!(s.id(), id);
            assert_eq!(s.choices()[0], 1);
        }
        assert!(enumerate_systems(2).is_err());
    }

    #[test]
    fn system_validation() {
        assert!(ShadowSystem::from_tail(4, &[3, 1]).is_err());
        assert!(ShadowSystem::from_tail(4, &[1]).is_err());
        assert!(ShadowSystem::new(4, vec![2, 1, 1]).is_err());
        assert!(ShadowSystem::from_id(4, 6).is_err());
        assert_eq!(ShadowSystem::chain(5).unwrap().choices(), &[1, 2, 3, 4]);
        let s = ShadowSystem::from_tail(5, &[2, 1, 3]).unwrap();
        // mixed radix with digits (1, 0, 2) over bases (2, 3, 4)
        assert_eq!(s.id(), 14);
        assert_eq!(ShadowSystem::from_id(5, 14).unwrap(), s);
    }

    #[test]
    fn system_json() {
        let s = ShadowSystem::from_tail(5, &[2, 3]).unwrap_err();
        assert!(matches!(s, ExpansionError::WrongLength { .. }));
        let s = ShadowSystem::from_tail(5, &[2, 3, 1]).unwrap();
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"V":5,"j":[1,2,3,1]}"#);
        let back: ShadowSystem = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<ShadowSystem>(r#"{"V":5,"j":[1,2,4,1]}"#).is_err());
    }

    #[test]
    fn variable_numbering() {
        assert_eq!(var_index(2, 1, 5).unwrap(), 0);
        assert_eq!(var_index(3, 3, 5).unwrap(), 4);
        let vars = VarIndex::new(7).unwrap();
        assert_eq!(vars.index(6, 3).unwrap(), 13);
        assert_eq!(vars.len(), 14);
        for idx in 0..vars.len() {
            let (i, k) = vars.coordinate(idx).unwrap();
            assert_eq!(vars.index(i, k).unwrap(), idx);
        }
        for (i, k) in [(1, 1), (1, 2), (2, 3), (7, 1), (3, 4), (0, 1)] {
            assert!(vars.index(i, k).is_err(), "({i},{k})");
        }
    }

    #[test]
    fn second_vertex_form() {
        // Q2 = r21² + r22² - r21
        let s = ShadowSystem::from_tail(4, &[1, 1]).unwrap();
        let q = inequality_form(&s, 2);
        let mut a = RatMatrix::zeros(5, 5);
        a[(0, 0)] = Rational::one();
        a[(1, 1)] = Rational::one();
        let mut b = RatVector::zeros(5);
        b[0] = -Rational::one();
        assert_eq!(q, QuadraticForm { a, b, c0: Rational::zero() });
    }

    #[test]
    fn third_vertex_shadowed_by_second() {
        // Q3 = r31²+r32²+r33² - r21 r31 - r22 r32; vars r21=0 r22=1 r31=2 r32=3 r33=4
        let s = ShadowSystem::from_tail(4, &[2, 1]).unwrap();
        let q = inequality_form(&s, 3);
        let mut a = RatMatrix::zeros(5, 5);
        for d in 2..5 {
            a[(d, d)] = Rational::one();
        }
        for (r, c) in [(0, 2), (2, 0), (1, 3), (3, 1)] {
            a[(r, c)] = rat(-1, 2);
        }
        assert_eq!(q.a, a);
        assert!(q.b.is_zero());
        assert!(q.c0.is_zero());
    }

    #[test]
    fn dimensions() {
        for v in 3..=8 {
            let s = ShadowSystem::from_id(v, 0).unwrap();
            let f = assemble_f(&s, &vec![1; v - 1]).unwrap();
            assert_eq!(f.n(), 3 * v - 7);
            assert!(f.a.is_symmetric());
        }
    }

    #[test]
    fn coefficient_errors() {
        let s = ShadowSystem::from_id(4, 0).unwrap();
        assert!(matches!(assemble_f(&s, &[0, 0, 0]), Err(ExpansionError::NonPositiveCoefficient { index: 2, .. })));
        assert!(matches!(
            assemble_f(&s, &[1, 2]),
            Err(ExpansionError::WrongCoefficientCount { expected: 3, found: 2 })
        ));
    }

    #[test]
    fn unit_weights_sum_forms() {
        let s = ShadowSystem::from_tail(5, &[2, 1, 3]).unwrap();
        let f = assemble_f(&s, &[1, 1, 1, 1]).unwrap();
        let mut a = RatMatrix::zeros(8, 8);
        for q in inequality_forms(&s) {
            a.add_scaled(&Rational::one(), &q.a).unwrap();
        }
        assert_eq!(f.a, a);
    }

    #[test]
    fn homogeneous_in_weights() {
        let s = ShadowSystem::from_tail(4, &[1, 1]).unwrap();
        let f = assemble_f(&s, &[94, 46, 97]).unwrap();
        let g = assemble_f(&s, &[188, 92, 194]).unwrap();
        assert_eq!(g, f.scale(&Rational::from(2)));
    }

    #[test]
    fn reconstruction_balances() {
        let x: RatVector = (0..8).map(|t| rat(t * 3 - 7, t + 2)).collect();
        let rs = reconstruct_vertices(5, &x).unwrap();
        assert_eq!(rs[0], RatVector::from_ints(&[1, 0, 0]));
        assert!(rs[1][2].is_zero());
        let total = rs.iter().fold(RatVector::zeros(3), |acc, r| &acc + r);
        assert!(total.is_zero());
    }
}
