//! The finite Fourier transform on `F_q^{m×n}` with pairing
//! `⟨x, y⟩ = Tr(xᵀy)` and character `ψ = ζ_p^{Tr(·)}`, plus the
//! characteristic-function duality and Poisson summation over code tuples.
//!
//! Tables are dense. The key of a matrix is its base-`q` digit string in
//! row-major order with entry `(0, 0)` most significant, so numeric order of
//! keys is lexicographic order of matrices.

use num_bigint::BigInt;
use num_traits::One;
use rand::Rng;

use crate::algebra::{CyclotomicInteger, CyclotomicRational, FieldElement, FieldSpec, Rational};
use crate::codes::{effective_length_weight, CodeMatrix, CodeTuple};
use crate::limits::{checked_pow, Limits};
use crate::{Error, Result};

/// Values of function tables: elements of `ℚ[ζ_p]`.
pub type ExactValue = CyclotomicRational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixShape {
    field: FieldSpec,
    m: usize,
    n: usize,
}

impl MatrixShape {
    pub fn new(field: &FieldSpec, m: usize, n: usize) -> Self {
        MatrixShape { field: field.clone(), m, n }
    }

    pub fn of_tuple(tuple: &CodeTuple) -> Self {
        Self::new(tuple.field(), tuple.m(), tuple.n())
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `q^{mn}`, if it fits in 64 bits.
    pub fn size(&self) -> Option<u64> {
        checked_pow(self.field.order() as u64, self.m * self.n)
    }

    pub fn index_of(&self, x: &CodeMatrix) -> usize {
        let q = self.field.order() as usize;
        x.entries().iter().fold(0, |acc, e| acc * q + e.label() as usize)
    }

    pub fn matrix_at(&self, mut index: usize) -> CodeMatrix {
        let q = self.field.order() as usize;
        let mut entries = vec![FieldElement::ZERO; self.m * self.n];
        for e in entries.iter_mut().rev() {
            *e = FieldElement((index % q) as u32);
            index /= q;
        }
        CodeMatrix::from_entries(self.m, self.n, entries)
    }

    fn check(&self, x: &CodeMatrix) -> Result<()> {
        if x.rows() == self.m && x.cols() == self.n {
            Ok(())
        } else {
            Err(Error::ShapeMismatch(format!("expected {}×{}, got {}×{}", self.m, self.n, x.rows(), x.cols())))
        }
    }

    /// `-x` entrywise.
    pub fn negate(&self, x: &CodeMatrix) -> CodeMatrix {
        let entries = x.entries().iter().map(|&e| self.field.neg(e)).collect();
        CodeMatrix::from_entries(x.rows(), x.cols(), entries)
    }
}

/// A function `F_q^{m×n} → ℚ[ζ_p]`, stored densely by key.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFunctionTable {
    shape: MatrixShape,
    values: Vec<ExactValue>,
}

impl MatrixFunctionTable {
    pub fn from_fn(shape: &MatrixShape, limits: &Limits, mut f: impl FnMut(&CodeMatrix) -> ExactValue) -> Result<Self> {
        let size = limits.check_transform(shape.size())? as usize;
        let values = (0..size).map(|i| f(&shape.matrix_at(i))).collect();
        Ok(MatrixFunctionTable { shape: shape.clone(), values })
    }

    pub fn from_values(shape: &MatrixShape, values: Vec<ExactValue>) -> Result<Self> {
        if Some(values.len() as u64) != shape.size() {
            return Err(Error::ShapeMismatch(format!(
                "{} values for a table of {:?} keys",
                values.len(),
                shape.size()
            )));
        }
        Ok(MatrixFunctionTable { shape: shape.clone(), values })
    }

    fn p(shape: &MatrixShape) -> u32 {
        shape.field.characteristic()
    }

    pub fn delta(shape: &MatrixShape, at: &CodeMatrix, limits: &Limits) -> Result<Self> {
        shape.check(at)?;
        let p = Self::p(shape);
        Self::from_fn(shape, limits, |x| if x == at { ExactValue::one(p) } else { ExactValue::zero(p) })
    }

    pub fn constant(shape: &MatrixShape, c: &Rational, limits: &Limits) -> Result<Self> {
        let p = Self::p(shape);
        Self::from_fn(shape, limits, |_| ExactValue::from_scalar(p, c.clone()))
    }

    /// `x ↦ z^{ew(x)}`.
    pub fn ew_power(shape: &MatrixShape, z: &Rational, limits: &Limits) -> Result<Self> {
        let p = Self::p(shape);
        let pows: Vec<Rational> =
            std::iter::successors(Some(Rational::one()), |prev| Some(prev * z)).take(shape.n + 1).collect();
        Self::from_fn(shape, limits, |x| ExactValue::from_scalar(p, pows[effective_length_weight(x)].clone()))
    }

    /// Indicator of `C̲`.
    pub fn characteristic(tuple: &CodeTuple, limits: &Limits) -> Result<Self> {
        let shape = MatrixShape::of_tuple(tuple);
        let p = Self::p(&shape);
        Self::from_fn(&shape, limits, |x| if tuple.contains(x) { ExactValue::one(p) } else { ExactValue::zero(p) })
    }

    /// Independent uniform integers in `lo..=hi` at every key.
    pub fn random_integer<R: Rng + ?Sized>(
        shape: &MatrixShape,
        lo: i64,
        hi: i64,
        rng: &mut R,
        limits: &Limits,
    ) -> Result<Self> {
        let p = Self::p(shape);
        Self::from_fn(shape, limits, |_| {
            ExactValue::from_scalar(p, Rational::from_integer(rng.gen_range(lo..=hi).into()))
        })
    }

    pub fn shape(&self) -> &MatrixShape {
        &self.shape
    }

    pub fn values(&self) -> &[ExactValue] {
        &self.values
    }

    pub fn get(&self, x: &CodeMatrix) -> &ExactValue {
        &self.values[self.shape.index_of(x)]
    }

    pub fn scale(&self, s: &Rational) -> Self {
        MatrixFunctionTable { shape: self.shape.clone(), values: self.values.iter().map(|v| v.scale(s)).collect() }
    }
}

/// `⟨x, y⟩ = Tr(xᵀy)`, the sum of the diagonal entries of the `n × n`
/// matrix `xᵀy`.
pub fn matrix_pairing(field: &FieldSpec, x: &CodeMatrix, y: &CodeMatrix) -> Result<FieldElement> {
    if x.rows() != y.rows() || x.cols() != y.cols() {
        return Err(Error::ShapeMismatch(format!("{}×{} vs {}×{}", x.rows(), x.cols(), y.rows(), y.cols())));
    }
    let mut trace = FieldElement::ZERO;
    for j in 0..x.cols() {
        // (xᵀy)_{jj} = Σ_i x_{ij} y_{ij}
        let diag = (0..x.rows()).fold(FieldElement::ZERO, |acc, i| field.add(acc, field.mul(x.get(i, j), y.get(i, j))));
        trace = field.add(trace, diag);
    }
    Ok(trace)
}

/// `Tr(ab) mod p` for all label pairs, row-major.
fn trace_product_table(field: &FieldSpec) -> Vec<u32> {
    let q = field.order();
    let mut t = Vec::with_capacity((q * q) as usize);
    for a in field.elements() {
        for b in field.elements() {
            t.push(field.trace_product(a, b));
        }
    }
    t
}

/// In-place transform along every coordinate; `conjugate` uses `ψ(-·)`.
///
/// `ψ(⟨x, ξ⟩) = Π_k ψ(x_k ξ_k)` over the `mn` entries, so the transform
/// factors into `mn` one-coordinate transforms of size `q`.
fn separable_transform(shape: &MatrixShape, values: &mut [ExactValue], conjugate: bool) {
    let field = &shape.field;
    let q = field.order() as usize;
    let p = field.characteristic();
    let exps = trace_product_table(field);
    let coords = shape.m * shape.n;
    let total = values.len();
    let mut stride = total;
    let mut column = vec![Vec::new(); q];
    for _ in 0..coords {
        stride /= q;
        for base in (0..total).step_by(stride * q) {
            for off in 0..stride {
                for (b, slot) in column.iter_mut().enumerate() {
                    *slot = values[base + off + b * stride].sparse();
                }
                for a in 0..q {
                    let terms = column.iter().enumerate().filter(|(_, v)| !v.is_empty()).map(|(b, v)| {
                        let e = exps[a * q + b];
                        (v.as_slice(), if conjugate { (p - e) % p } else { e })
                    });
                    values[base + off + a * stride] = ExactValue::sum_rotated(p, terms);
                }
            }
        }
    }
}

/// `FTf(x) = Σ_ξ f(ξ) ψ(⟨x, ξ⟩)`, exactly.
pub fn finite_fourier_transform(f: &MatrixFunctionTable, limits: &Limits) -> Result<MatrixFunctionTable> {
    limits.check_transform(f.shape.size())?;
    let mut values = f.values.clone();
    separable_transform(&f.shape, &mut values, false);
    Ok(MatrixFunctionTable { shape: f.shape.clone(), values })
}

/// `f(x) = q^{-mn} Σ_ξ FTf(ξ) ψ(-⟨x, ξ⟩)`.
pub fn inverse_ft(table: &MatrixFunctionTable, limits: &Limits) -> Result<MatrixFunctionTable> {
    let size = limits.check_transform(table.shape.size())?;
    let mut values = table.values.clone();
    separable_transform(&table.shape, &mut values, true);
    let inv = Rational::new(BigInt::one(), BigInt::from(size));
    Ok(MatrixFunctionTable { shape: table.shape.clone(), values }.scale(&inv))
}

/// `FTχ_{C̲}(x)`, computed one row at a time as
/// `Π_i Σ_{ξ_i ∈ C_i} ψ(⟨x_i, ξ_i⟩)`.
pub fn ft_characteristic(tuple: &CodeTuple, x: &CodeMatrix, limits: &Limits) -> Result<CyclotomicInteger> {
    MatrixShape::of_tuple(tuple).check(x)?;
    let field = tuple.field();
    let p = field.characteristic();
    let mut product = CyclotomicInteger::one(p);
    for (i, code) in tuple.codes().iter().enumerate() {
        let row = x.row(i);
        let mut counts = vec![0u64; p as usize];
        for xi in code.codewords(limits)? {
            let e = row.iter().zip(&xi).fold(0u32, |acc, (a, b)| (acc + field.trace_product(*a, *b)) % p);
            counts[e as usize] += 1;
        }
        let row_sum = CyclotomicInteger::from_coeffs(p, counts.into_iter().map(BigInt::from).collect());
        product = &product * &row_sum;
        if product.is_zero() {
            break;
        }
    }
    Ok(product)
}

/// `(1-z)^{ew(x)} (1+(q^m-1)z)^{n-ew(x)}`, the closed form of `FT z^{ew}` at `x`.
pub fn ft_ew_closed_form(field: &FieldSpec, x: &CodeMatrix, z: &Rational) -> Rational {
    let ew = effective_length_weight(x);
    let qm = Rational::from_integer(BigInt::from(field.order()).pow(x.rows() as u32));
    let one = Rational::one();
    let a = &one - z;
    let b = &one + (qm - &one) * z;
    crate::algebra::rational::pow(&a, ew) * crate::algebra::rational::pow(&b, x.cols() - ew)
}

/// Both sides of `Σ_{x ∈ C̲^⊥} f(x) = |C̲|^{-1} Σ_{x ∈ C̲} FTf(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonReport {
    pub lhs: ExactValue,
    pub rhs: ExactValue,
    pub equal: bool,
}

pub fn poisson_check(tuple: &CodeTuple, f: &MatrixFunctionTable, limits: &Limits) -> Result<PoissonReport> {
    let shape = MatrixShape::of_tuple(tuple);
    if f.shape != shape {
        return Err(Error::ShapeMismatch("function table does not match the code tuple".into()));
    }
    let p = shape.field.characteristic();
    let mut lhs = ExactValue::zero(p);
    for x in tuple.dual().elements(limits)? {
        lhs += f.get(&x);
    }
    let ft = finite_fourier_transform(f, limits)?;
    let mut sum = ExactValue::zero(p);
    for x in tuple.elements(limits)? {
        sum += ft.get(&x);
    }
    let rhs = sum.scale(&Rational::new(BigInt::one(), tuple.size()));
    let equal = lhs == rhs;
    Ok(PoissonReport { lhs, rhs, equal })
}

/// Whether every value of the table is zero.
pub fn is_zero_table(t: &MatrixFunctionTable) -> bool {
    t.values.iter().all(|v| v.is_zero())
}

impl MatrixFunctionTable {
    /// Scalar (rational) values, when every entry lies in `ℚ`.
    pub fn rational_values(&self) -> Option<Vec<Rational>> {
        self.values.iter().map(|v| v.as_scalar().cloned()).collect()
    }

    pub fn sum(&self) -> ExactValue {
        let p = self.shape.field.characteristic();
        self.values.iter().fold(ExactValue::zero(p), |mut acc, v| {
            acc += v;
            acc
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::additive_character;
    use crate::algebra::rational::{int, ratio};
    use crate::codes::LinearCode;
    use crate::enumerators::{effective_length_enumerator, macwilliams_transform};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f(q: u64) -> FieldSpec {
        FieldSpec::new(q, None).unwrap()
    }

    fn l() -> Limits {
        Limits::default()
    }

    /// Definition-level double loop: `FTf(x) = Σ_ξ f(ξ) ψ(⟨x, ξ⟩)`.
    fn direct_ft(t: &MatrixFunctionTable, conjugate: bool) -> Vec<ExactValue> {
        let shape = t.shape();
        let field = shape.field();
        let size = shape.size().unwrap() as usize;
        (0..size)
            .map(|i| {
                let x = shape.matrix_at(i);
                let mut acc = ExactValue::zero(field.characteristic());
                for j in 0..size {
                    let xi = shape.matrix_at(j);
                    let mut pair = matrix_pairing(field, &x, &xi).unwrap();
                    if conjugate {
                        pair = field.neg(pair);
                    }
                    let chi = additive_character(field, pair).to_rational();
                    acc += &(&chi * &t.values()[j]);
                }
                acc
            })
            .collect()
    }

    #[test]
    fn key_encoding_is_bijective_and_row_major() {
        let shape = MatrixShape::new(&f(3), 2, 2);
        for i in 0..81 {
            assert_eq!(shape.index_of(&shape.matrix_at(i)), i);
        }
        let x = shape.matrix_at(1);
        assert_eq!(x.get(1, 1), FieldElement(1));
        let x = shape.matrix_at(27);
        assert_eq!(x.get(0, 0), FieldElement(1));
    }

    #[test]
    fn pairing_examples() {
        let f2 = f(2);
        let id =
            CodeMatrix::from_rows(&[vec![FieldElement(1), FieldElement(0)], vec![FieldElement(0), FieldElement(1)]])
                .unwrap();
        assert_eq!(matrix_pairing(&f2, &id, &id).unwrap(), FieldElement::ZERO);
        assert_eq!(matrix_pairing(&f2, &CodeMatrix::zeros(2, 2), &id).unwrap(), FieldElement::ZERO);
        assert!(matrix_pairing(&f2, &CodeMatrix::zeros(1, 2), &id).is_err());
    }

    #[test]
    fn pairing_decomposes_by_rows_and_columns() {
        let f3 = f(3);
        let shape = MatrixShape::new(&f3, 2, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let x = shape.matrix_at(rng.gen_range(0..729));
            let y = shape.matrix_at(rng.gen_range(0..729));
            let dot = |a: &[FieldElement], b: &[FieldElement]| {
                a.iter().zip(b).fold(FieldElement::ZERO, |acc, (u, v)| f3.add(acc, f3.mul(*u, *v)))
            };
            let by_rows = (0..2).fold(FieldElement::ZERO, |acc, i| f3.add(acc, dot(x.row(i), y.row(i))));
            let by_cols = (0..3).fold(FieldElement::ZERO, |acc, j| f3.add(acc, dot(&x.column(j), &y.column(j))));
            let pair = matrix_pairing(&f3, &x, &y).unwrap();
            assert_eq!(pair, by_rows);
            assert_eq!(pair, by_cols);
        }
    }

    #[test]
    fn delta_and_constant() {
        let shape = MatrixShape::new(&f(3), 1, 2);
        let delta = MatrixFunctionTable::delta(&shape, &CodeMatrix::zeros(1, 2), &l()).unwrap();
        let ft = finite_fourier_transform(&delta, &l()).unwrap();
        assert!(ft.values().iter().all(|v| *v == ExactValue::one(3)));
        let one = MatrixFunctionTable::constant(&shape, &int(1), &l()).unwrap();
        let ft = finite_fourier_transform(&one, &l()).unwrap();
        assert_eq!(ft.values()[0], ExactValue::from_scalar(3, int(9)));
        assert!(ft.values()[1..].iter().all(ExactValue::is_zero));
        assert_eq!(inverse_ft(&one, &l()).unwrap(), delta);
    }

    #[test]
    fn fast_transform_matches_the_definition() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for (q, m, n) in [(2u64, 2, 2), (3, 1, 2), (4, 1, 2), (5, 2, 1), (3, 2, 2), (9, 1, 1)] {
            let shape = MatrixShape::new(&f(q), m, n);
            let t = MatrixFunctionTable::random_integer(&shape, -5, 5, &mut rng, &l()).unwrap();
            let fast = finite_fourier_transform(&t, &l()).unwrap();
            assert_eq!(fast.values(), &direct_ft(&t, false)[..], "q={q} m={m} n={n}");
            let inv = inverse_ft(&t, &l()).unwrap();
            let size = Rational::from_integer(shape.size().unwrap().into());
            let expected: Vec<_> = direct_ft(&t, true).iter().map(|v| v.scale(&(Rational::one() / &size))).collect();
            assert_eq!(inv.values(), &expected[..]);
        }
    }

    #[test]
    fn roundtrips() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let shape = MatrixShape::new(&f(3), 1, 2);
        let t = MatrixFunctionTable::random_integer(&shape, -9, 9, &mut rng, &l()).unwrap();
        assert_eq!(inverse_ft(&finite_fourier_transform(&t, &l()).unwrap(), &l()).unwrap(), t);
        let shape = MatrixShape::new(&f(4), 2, 1);
        let at = shape.matrix_at(rng.gen_range(0..16));
        let d = MatrixFunctionTable::delta(&shape, &at, &l()).unwrap();
        assert_eq!(inverse_ft(&finite_fourier_transform(&d, &l()).unwrap(), &l()).unwrap(), d);
    }

    #[test]
    fn double_transform_reflects() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for (q, m, n) in [(3u64, 1, 3), (5, 1, 2), (4, 2, 1), (7, 1, 1)] {
            let shape = MatrixShape::new(&f(q), m, n);
            let t = MatrixFunctionTable::random_integer(&shape, -3, 3, &mut rng, &l()).unwrap();
            let twice = finite_fourier_transform(&finite_fourier_transform(&t, &l()).unwrap(), &l()).unwrap();
            let size = Rational::from_integer(shape.size().unwrap().into());
            for i in 0..shape.size().unwrap() as usize {
                let x = shape.matrix_at(i);
                assert_eq!(twice.get(&x), &t.get(&shape.negate(&x)).scale(&size));
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let shape = MatrixShape::new(&f(2), 4, 5);
        assert!(matches!(MatrixFunctionTable::constant(&shape, &int(1), &l()), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn characteristic_examples() {
        let sd = CodeTuple::single(LinearCode::repetition(&f(2), 2));
        let x = |a, b| CodeMatrix::from_rows(&[vec![FieldElement(a), FieldElement(b)]]).unwrap();
        assert_eq!(ft_characteristic(&sd, &x(1, 1), &l()).unwrap(), CyclotomicInteger::from_scalar(2, 2.into()));
        assert!(ft_characteristic(&sd, &x(1, 0), &l()).unwrap().is_zero());
        let f3 = f(3);
        let tuple = CodeTuple::new(vec![LinearCode::repetition(&f3, 3), LinearCode::full(&f3, 3)]).unwrap();
        assert_eq!(
            ft_characteristic(&tuple, &CodeMatrix::zeros(2, 3), &l()).unwrap(),
            CyclotomicInteger::from_scalar(3, tuple.size())
        );
    }

    #[test]
    fn ew_closed_form_examples() {
        let f2 = f(2);
        let z = ratio(1, 3);
        let zero = CodeMatrix::zeros(1, 1);
        let one = CodeMatrix::from_rows(&[vec![FieldElement(1)]]).unwrap();
        assert_eq!(ft_ew_closed_form(&f2, &zero, &z), int(1) + &z);
        assert_eq!(ft_ew_closed_form(&f2, &one, &z), int(1) - &z);
        let f3 = f(3);
        assert_eq!(
            ft_ew_closed_form(&f3, &CodeMatrix::zeros(2, 3), &z),
            crate::algebra::rational::pow(&(int(1) + int(8) * &z), 3)
        );
    }

    #[test]
    fn poisson_examples() {
        let f2 = f(2);
        let sd = LinearCode::repetition(&f2, 2);
        let tuple = CodeTuple::new(vec![sd.clone(), sd]).unwrap();
        let shape = MatrixShape::of_tuple(&tuple);
        let delta = MatrixFunctionTable::delta(&shape, &CodeMatrix::zeros(2, 2), &l()).unwrap();
        let r = poisson_check(&tuple, &delta, &l()).unwrap();
        assert!(r.equal);
        assert_eq!(r.lhs, ExactValue::one(2));

        let half = ratio(1, 2);
        let ew = MatrixFunctionTable::ew_power(&shape, &half, &l()).unwrap();
        let r = poisson_check(&tuple, &ew, &l()).unwrap();
        assert!(r.equal);
        let dual_enum = effective_length_enumerator(&tuple.dual(), &l()).unwrap();
        assert_eq!(r.lhs.as_scalar(), Some(&dual_enum.eval(&half)));
        let primal = effective_length_enumerator(&tuple, &l()).unwrap();
        let via_transform = macwilliams_transform(&primal, 2, &4.into(), &4.into()).unwrap();
        assert_eq!(r.rhs.as_scalar(), Some(&via_transform.eval(&half)));
    }

    #[test]
    fn poisson_shape_mismatch() {
        let tuple = CodeTuple::single(LinearCode::repetition(&f(2), 2));
        let wrong = MatrixFunctionTable::constant(&MatrixShape::new(&f(2), 1, 3), &int(1), &l()).unwrap();
        assert!(poisson_check(&tuple, &wrong, &l()).is_err());
    }

    #[test]
    fn ew_power_transform_matches_closed_form() {
        for (q, m, n) in [(2u64, 1, 3), (2, 2, 2), (3, 1, 2), (4, 2, 1), (5, 1, 2)] {
            let shape = MatrixShape::new(&f(q), m, n);
            for z in [ratio(1, 3), ratio(2, 5)] {
                let t =
                    finite_fourier_transform(&MatrixFunctionTable::ew_power(&shape, &z, &l()).unwrap(), &l()).unwrap();
                for i in 0..shape.size().unwrap() as usize {
                    let x = shape.matrix_at(i);
                    assert_eq!(t.get(&x).as_scalar(), Some(&ft_ew_closed_form(shape.field(), &x, &z)));
                }
            }
        }
    }

    #[test]
    fn characteristic_transform_is_scaled_dual_indicator() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for (q, m, n) in [(2u64, 2, 3), (3, 1, 3), (4, 2, 2)] {
            let field = f(q);
            let codes = (0..m).map(|_| crate::codes::random_code(&field, n, &mut rng)).collect();
            let tuple = CodeTuple::new(codes).unwrap();
            let ft =
                finite_fourier_transform(&MatrixFunctionTable::characteristic(&tuple, &l()).unwrap(), &l()).unwrap();
            let dual = tuple.dual();
            let size = Rational::from_integer(tuple.size());
            for (i, v) in ft.values().iter().enumerate() {
                let x = ft.shape().matrix_at(i);
                let expected = if dual.contains(&x) { size.clone() } else { Rational::from_integer(0.into()) };
                assert_eq!(v.as_scalar(), Some(&expected));
                assert_eq!(ft_characteristic(&tuple, &x, &l()).unwrap().to_rational(), *v);
            }
        }
    }
}
