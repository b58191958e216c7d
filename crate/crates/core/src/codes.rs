//! Linear codes over `F_q`: generator matrices in reduced row-echelon form,
//! duals, codeword enumeration, coset transversals and the two weights.

use num_bigint::BigInt;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{FieldElement, FieldSpec};
use crate::limits::{checked_pow, Limits};
use crate::{Error, Result};

/// A word of `F_q^n`.
pub type CodeWord = Vec<FieldElement>;

/// A linear code `C ⊂ F_q^n` given by its reduced row-echelon generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    field: FieldSpec,
    n: usize,
    generator: Vec<CodeWord>,
    pivots: Vec<usize>,
}

impl LinearCode {
    /// Row-reduces integer-labelled rows, dropping dependent ones.
    pub fn from_labels(field: &FieldSpec, n: usize, rows: &[Vec<u64>]) -> Result<LinearCode> {
        let mut converted = Vec::with_capacity(rows.len());
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::RaggedRows { row: r, len: row.len(), n });
            }
            converted.push(row.iter().map(|&x| field.element(x)).collect::<Result<CodeWord>>()?);
        }
        Self::from_rows(field, n, converted)
    }

    pub fn from_rows(field: &FieldSpec, n: usize, mut rows: Vec<CodeWord>) -> Result<LinearCode> {
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::RaggedRows { row: r, len: row.len(), n });
            }
            if let Some(bad) = row.iter().find(|x| x.label() >= field.order()) {
                return Err(Error::NotInField(bad.label() as u64, field.order()));
            }
        }
        let pivots = row_reduce(field, &mut rows);
        rows.truncate(pivots.len());
        Ok(LinearCode { field: field.clone(), n, generator: rows, pivots })
    }

    pub fn zero(field: &FieldSpec, n: usize) -> LinearCode {
        LinearCode { field: field.clone(), n, generator: Vec::new(), pivots: Vec::new() }
    }

    /// The whole space `F_q^n`.
    pub fn full(field: &FieldSpec, n: usize) -> LinearCode {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { FieldElement::ONE } else { FieldElement::ZERO }).collect())
            .collect();
        LinearCode { field: field.clone(), n, generator: rows, pivots: (0..n).collect() }
    }

    /// The `[n, 1]` repetition code.
    pub fn repetition(field: &FieldSpec, n: usize) -> LinearCode {
        Self::from_rows(field, n, vec![vec![FieldElement::ONE; n]]).expect("valid row")
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dimension(&self) -> usize {
        self.generator.len()
    }

    pub fn generator(&self) -> &[CodeWord] {
        &self.generator
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `|C| = q^k` exactly.
    pub fn size(&self) -> BigInt {
        BigInt::from(self.field.order()).pow(self.dimension() as u32)
    }

    /// `q^k` if it fits in 64 bits.
    pub fn size_u64(&self) -> Option<u64> {
        checked_pow(self.field.order() as u64, self.dimension())
    }

    /// Integer labels of the generator, the code-file representation.
    pub fn generator_labels(&self) -> Vec<Vec<u64>> {
        self.generator.iter().map(|r| r.iter().map(|x| x.label() as u64).collect()).collect()
    }

    /// `C^⊥` under `⟨a,b⟩ = Σ a_i b_i`.
    pub fn dual(&self) -> LinearCode {
        let f = &self.field;
        let mut is_pivot = vec![false; self.n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        // For generator [I | A] (up to column order) the nullspace is spanned
        // by e_j - Σ_i A_{ij} e_{p_i} over non-pivot columns j.
        let rows = (0..self.n)
            .filter(|&j| !is_pivot[j])
            .map(|j| {
                let mut v = vec![FieldElement::ZERO; self.n];
                v[j] = FieldElement::ONE;
                for (row, &p) in self.generator.iter().zip(&self.pivots) {
                    v[p] = f.neg(row[j]);
                }
                v
            })
            .collect();
        Self::from_rows(f, self.n, rows).expect("dual rows are well formed")
    }

    /// Message vector `m` (length `k`) to codeword `Σ m_i g_i`.
    pub fn encode(&self, message: &[FieldElement]) -> CodeWord {
        let f = &self.field;
        let mut w = vec![FieldElement::ZERO; self.n];
        for (m, row) in message.iter().zip(&self.generator) {
            if m.is_zero() {
                continue;
            }
            for (x, g) in w.iter_mut().zip(row) {
                *x = f.add(*x, f.mul(*m, *g));
            }
        }
        w
    }

    /// Canonical coset representative `x - Σ x_{p_i} g_i`, which vanishes on
    /// every pivot column.
    pub fn coset_leader(&self, x: &[FieldElement]) -> CodeWord {
        let f = &self.field;
        let mut v = x.to_vec();
        for (row, &p) in self.generator.iter().zip(&self.pivots) {
            let c = v[p];
            if c.is_zero() {
                continue;
            }
            for (vi, g) in v.iter_mut().zip(row) {
                *vi = f.sub(*vi, f.mul(c, *g));
            }
        }
        v
    }

    pub fn contains(&self, x: &[FieldElement]) -> bool {
        x.len() == self.n && self.coset_leader(x).iter().all(|c| c.is_zero())
    }

    /// All `q^k` codewords, lexicographic in the message vector.
    pub fn codewords(&self, limits: &Limits) -> Result<Codewords<'_>> {
        limits.check_enumeration(self.size_u64())?;
        Ok(Codewords::new(self))
    }

    /// The `q^{n-k}` words vanishing on all pivot columns, one per coset of
    /// `F_q^n / C`, in lexicographic order of the free coordinates.
    pub fn coset_representatives(&self, limits: &Limits) -> Result<Vec<CodeWord>> {
        let free: Vec<usize> = (0..self.n).filter(|j| !self.pivots.contains(j)).collect();
        limits.check_enumeration(checked_pow(self.field.order() as u64, free.len()))?;
        let q = self.field.order();
        let mut out = Vec::new();
        let mut digits = vec![0u32; free.len()];
        loop {
            let mut v = vec![FieldElement::ZERO; self.n];
            for (&j, &d) in free.iter().zip(&digits) {
                v[j] = FieldElement(d);
            }
            out.push(v);
            if !odometer(&mut digits, q) {
                break;
            }
        }
        Ok(out)
    }
}

/// Advances a base-`q` counter (last digit fastest). Returns `false` on wrap.
pub(crate) fn odometer(digits: &mut [u32], q: u32) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < q {
            return true;
        }
        *d = 0;
    }
    false
}

/// Gauss-Jordan elimination in place; returns the pivot columns. Nonzero rows
/// end up first and normalized.
fn row_reduce(f: &FieldSpec, rows: &mut [CodeWord]) -> Vec<usize> {
    let n = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        if r == rows.len() {
            break;
        }
        let Some(sel) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = f.inv(rows[r][col]).expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let c = row[col];
            for (x, g) in row.iter_mut().zip(&pivot_row) {
                *x = f.sub(*x, f.mul(c, *g));
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// Streaming codeword enumeration. Each step updates one message digit and
/// patches the word with a precomputed multiple of the matching row.
pub struct Codewords<'a> {
    code: &'a LinearCode,
    multiples: Vec<Vec<CodeWord>>,
    message: Vec<u32>,
    word: CodeWord,
    done: bool,
}

impl<'a> Codewords<'a> {
    fn new(code: &'a LinearCode) -> Self {
        let f = &code.field;
        let multiples = code
            .generator
            .iter()
            .map(|row| f.elements().map(|a| row.iter().map(|&g| f.mul(a, g)).collect()).collect())
            .collect();
        Codewords {
            code,
            multiples,
            message: vec![0; code.dimension()],
            word: vec![FieldElement::ZERO; code.n],
            done: false,
        }
    }
}

impl Iterator for Codewords<'_> {
    type Item = CodeWord;

    fn next(&mut self) -> Option<CodeWord> {
        if self.done {
            return None;
        }
        let out = self.word.clone();
        let f = &self.code.field;
        let q = f.order();
        let mut i = self.message.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            let old = self.message[i] as usize;
            let new = (self.message[i] + 1) % q;
            self.message[i] = new;
            let (before, after) = (&self.multiples[i][old], &self.multiples[i][new as usize]);
            for ((w, b), a) in self.word.iter_mut().zip(before).zip(after) {
                *w = f.add(f.sub(*w, *b), *a);
            }
            if new != 0 {
                break;
            }
        }
        Some(out)
    }
}

/// Number of nonzero coordinates.
pub fn hamming_weight(x: &[FieldElement]) -> usize {
    x.iter().filter(|c| !c.is_zero()).count()
}

/// An `m × n` matrix over `F_q`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CodeMatrix {
    m: usize,
    n: usize,
    entries: Vec<FieldElement>,
}

impl CodeMatrix {
    pub fn zeros(m: usize, n: usize) -> Self {
        CodeMatrix { m, n, entries: vec![FieldElement::ZERO; m * n] }
    }

    pub fn from_rows(rows: &[CodeWord]) -> Result<Self> {
        let n = rows.first().map_or(0, Vec::len);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::RaggedRows { row: r, len: row.len(), n });
            }
        }
        Ok(CodeMatrix { m: rows.len(), n, entries: rows.concat() })
    }

    pub(crate) fn from_entries(m: usize, n: usize, entries: Vec<FieldElement>) -> Self {
        debug_assert_eq!(entries.len(), m * n);
        CodeMatrix { m, n, entries }
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: FieldElement) {
        self.entries[i * self.n + j] = x;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn column(&self, j: usize) -> CodeWord {
        (0..self.m).map(|i| self.get(i, j)).collect()
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.entries
    }
}

/// Number of nonzero columns.
pub fn effective_length_weight(x: &CodeMatrix) -> usize {
    (0..x.n).filter(|&j| (0..x.m).any(|i| !x.get(i, j).is_zero())).count()
}

/// `m` linear codes of common field and length, read as `C_1 × … × C_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeTuple {
    codes: Vec<LinearCode>,
}

impl CodeTuple {
    pub fn new(codes: Vec<LinearCode>) -> Result<Self> {
        let first = codes.first().ok_or_else(|| Error::ShapeMismatch("a code tuple needs at least one code".into()))?;
        for c in &codes[1..] {
            if c.field() != first.field() {
                return Err(Error::FieldMismatch);
            }
            if c.len() != first.len() {
                return Err(Error::ShapeMismatch(format!("code lengths {} and {} differ", first.len(), c.len())));
            }
        }
        Ok(CodeTuple { codes })
    }

    pub fn single(code: LinearCode) -> Self {
        CodeTuple { codes: vec![code] }
    }

    pub fn codes(&self) -> &[LinearCode] {
        &self.codes
    }

    pub fn m(&self) -> usize {
        self.codes.len()
    }

    pub fn n(&self) -> usize {
        self.codes[0].len()
    }

    pub fn field(&self) -> &FieldSpec {
        self.codes[0].field()
    }

    /// `|C̲| = Π |C_i|`.
    pub fn size(&self) -> BigInt {
        self.codes.iter().map(LinearCode::size).product()
    }

    pub fn size_u64(&self) -> Option<u64> {
        self.codes.iter().try_fold(1u64, |acc, c| acc.checked_mul(c.size_u64()?))
    }

    /// `C̲^⊥ = C_1^⊥ × … × C_m^⊥`.
    pub fn dual(&self) -> CodeTuple {
        CodeTuple { codes: self.codes.iter().map(LinearCode::dual).collect() }
    }

    /// Whether row `i` of `x` lies in `C_i` for every `i`.
    pub fn contains(&self, x: &CodeMatrix) -> bool {
        x.rows() == self.m() && x.cols() == self.n() && self.codes.iter().enumerate().all(|(i, c)| c.contains(x.row(i)))
    }

    /// Every element of `C̲` as an `m × n` matrix; the last row varies fastest.
    pub fn elements(&self, limits: &Limits) -> Result<Vec<CodeMatrix>> {
        limits.check_enumeration(self.size_u64())?;
        let lists: Vec<Vec<CodeWord>> =
            self.codes.iter().map(|c| c.codewords(limits).map(Iterator::collect)).collect::<Result<_>>()?;
        let mut out = Vec::new();
        let mut idx = vec![0u32; lists.len()];
        let sizes: Vec<u32> = lists.iter().map(|l| l.len() as u32).collect();
        loop {
            let rows: Vec<CodeWord> = idx.iter().zip(&lists).map(|(&i, l)| l[i as usize].clone()).collect();
            out.push(CodeMatrix::from_entries(self.m(), self.n(), rows.concat()));
            if !mixed_odometer(&mut idx, &sizes) {
                break;
            }
        }
        Ok(out)
    }
}

fn mixed_odometer(digits: &mut [u32], bases: &[u32]) -> bool {
    for (d, &b) in digits.iter_mut().zip(bases).rev() {
        *d += 1;
        if *d < b {
            return true;
        }
        *d = 0;
    }
    false
}

/// A set of words with no linear structure. Only weight enumeration is
/// defined for it; duality needs `LinearCode`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordList {
    pub field: FieldSpec,
    pub n: usize,
    pub words: Vec<CodeWord>,
}

/// Random code as documented for reproducible suites: `k` uniform in `0..=n`,
/// then a uniform `k × n` matrix over `F_q`, row-reduced. The rank may drop
/// below `k`.
pub fn random_code<R: Rng + ?Sized>(field: &FieldSpec, n: usize, rng: &mut R) -> LinearCode {
    let k = rng.gen_range(0..=n);
    random_code_with_rows(field, n, k, rng)
}

/// Uniform `k × n` matrix, row-reduced.
pub fn random_code_with_rows<R: Rng + ?Sized>(field: &FieldSpec, n: usize, k: usize, rng: &mut R) -> LinearCode {
    let q = field.order();
    let rows = (0..k).map(|_| (0..n).map(|_| FieldElement(rng.gen_range(0..q))).collect()).collect();
    LinearCode::from_rows(field, n, rows).expect("random rows are well formed")
}

/// Every linear code in `F_q^n`, each exactly once, by walking all reduced
/// row-echelon matrices.
pub fn all_codes(field: &FieldSpec, n: usize) -> Vec<LinearCode> {
    let q = field.order();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let pivots: Vec<usize> = (0..n).filter(|&j| mask >> j & 1 == 1).collect();
        // free slots: (row i, column j) with j > p_i and j not a pivot
        let slots: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| ((p + 1)..n).filter(|j| mask >> j & 1 == 0).map(move |j| (i, j)))
            .collect();
        let mut digits = vec![0u32; slots.len()];
        loop {
            let mut rows = vec![vec![FieldElement::ZERO; n]; pivots.len()];
            for (i, &p) in pivots.iter().enumerate() {
                rows[i][p] = FieldElement::ONE;
            }
            for (&(i, j), &d) in slots.iter().zip(&digits) {
                rows[i][j] = FieldElement(d);
            }
            out.push(LinearCode { field: field.clone(), n, generator: rows, pivots: pivots.clone() });
            if !odometer(&mut digits, q) {
                break;
            }
        }
    }
    out
}

/// On-disk code description: entries are integer labels in the polynomial
/// basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeFile {
    pub q: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
    pub n: usize,
    pub generators: Vec<Vec<u64>>,
}

impl CodeFile {
    pub fn from_code(code: &LinearCode) -> Self {
        CodeFile {
            q: code.field().order() as u64,
            modulus: code.field().modulus().map(<[u32]>::to_vec),
            n: code.len(),
            generators: code.generator_labels(),
        }
    }

    pub fn to_code(&self) -> Result<LinearCode> {
        let field = FieldSpec::new(self.q, self.modulus.as_deref())?;
        LinearCode::from_labels(&field, self.n, &self.generators)
    }
}
