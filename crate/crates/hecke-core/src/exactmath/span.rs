//! Integer echelon forms and subalgebra span closures.
//!
//! The heavy subspace computations (dimension of the operator algebra
//! generated by the level-0 Hecke generators, independence of operator
//! families) run over the integers: rational inputs are scaled to
//! primitive integer vectors, which leaves every span unchanged. Rows
//! are kept fully reduced and content-normalized, with `i128` fast
//! paths and a big-integer fallback for transient growth.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{ExactError, Matrix, Rat};

enum RowData {
    Small(Vec<i128>),
    Big(Vec<BigInt>),
}

impl RowData {
    fn to_big(&self) -> Vec<BigInt> {
        match self {
            RowData::Small(v) => v.iter().map(|&x| BigInt::from(x)).collect(),
            RowData::Big(v) => v.clone(),
        }
    }

    fn entry_is_zero(&self, j: usize) -> bool {
        match self {
            RowData::Small(v) => v[j] == 0,
            RowData::Big(v) => v[j].is_zero(),
        }
    }
}

struct ZRow {
    pivot: usize,
    data: RowData,
}

/// Row space over Q of a family of integer vectors, maintained as a
/// fully reduced integer echelon basis (deterministic, exact).
pub struct ZSpan {
    cols: usize,
    rows: Vec<ZRow>,
}

enum Cand {
    Small(Vec<i128>),
    Big(Vec<BigInt>),
}

impl Cand {
    fn from_big(v: Vec<BigInt>) -> Self {
        if v.iter().all(|x| i128::try_from(x).is_ok()) {
            Cand::Small(v.iter().map(|x| i128::try_from(x).unwrap()).collect())
        } else {
            Cand::Big(v)
        }
    }

    fn to_big(&self) -> Vec<BigInt> {
        match self {
            Cand::Small(v) => v.iter().map(|&x| BigInt::from(x)).collect(),
            Cand::Big(v) => v.clone(),
        }
    }

    fn first_nonzero(&self) -> Option<usize> {
        match self {
            Cand::Small(v) => v.iter().position(|x| *x != 0),
            Cand::Big(v) => v.iter().position(|x| !x.is_zero()),
        }
    }

    fn normalize_content(&mut self) {
        match self {
            Cand::Small(v) => {
                let mut g: i128 = 0;
                for &x in v.iter() {
                    g = g.gcd(&x);
                    if g == 1 {
                        break;
                    }
                }
                if g > 1 {
                    for x in v.iter_mut() {
                        *x /= g;
                    }
                }
            }
            Cand::Big(v) => {
                let one = BigInt::from(1);
                let mut g = BigInt::zero();
                for x in v.iter() {
                    g = g.gcd(x);
                    if g == one {
                        break;
                    }
                }
                if !g.is_zero() && g != one {
                    for x in v.iter_mut() {
                        *x = &*x / &g;
                    }
                }
                if v.iter().all(|x| i128::try_from(x).is_ok()) {
                    let small = v.iter().map(|x| i128::try_from(x).unwrap()).collect();
                    *self = Cand::Small(small);
                }
            }
        }
    }

    fn flip_sign_to_positive(&mut self, pivot: usize) {
        let neg = match self {
            Cand::Small(v) => v[pivot] < 0,
            Cand::Big(v) => v[pivot].is_negative(),
        };
        if neg {
            match self {
                Cand::Small(v) => v.iter_mut().for_each(|x| *x = -*x),
                Cand::Big(v) => v.iter_mut().for_each(|x| *x = -&*x),
            }
        }
    }
}

/// v := (b_p/g)·v − (v_p/g)·b with g = gcd, eliminating column `p`.
/// Small-path attempts work on a scratch copy so overflow can fall
/// back to exact big-integer arithmetic.
fn eliminate(v: &mut Cand, b: &RowData, p: usize) {
    if let (Cand::Small(vv), RowData::Small(bb)) = (&mut *v, b) {
        let bp = bb[p];
        let vp = vv[p];
        let g = bp.gcd(&vp);
        let (mb, mv) = (bp / g, vp / g);
        let mut scratch = vv.clone();
        let ok = (|| -> Option<()> {
            if mb != 1 {
                for x in scratch.iter_mut() {
                    *x = x.checked_mul(mb)?;
                }
            }
            for (x, &bx) in scratch[p..].iter_mut().zip(&bb[p..]) {
                if bx != 0 {
                    *x = x.checked_sub(mv.checked_mul(bx)?)?;
                }
            }
            Some(())
        })();
        if ok.is_some() {
            debug_assert_eq!(scratch[p], 0);
            *vv = scratch;
            return;
        }
    }
    // Exact fallback.
    let mut vv = v.to_big();
    let bb = b.to_big();
    let bp = bb[p].clone();
    let vp = vv[p].clone();
    let g = bp.gcd(&vp);
    let mb = &bp / &g;
    let mv = &vp / &g;
    if mb != BigInt::from(1) {
        for x in vv.iter_mut() {
            *x = &*x * &mb;
        }
    }
    for (x, bx) in vv[p..].iter_mut().zip(&bb[p..]) {
        if !bx.is_zero() {
            *x -= &mv * bx;
        }
    }
    debug_assert!(vv[p].is_zero());
    *v = Cand::Big(vv);
}

impl ZSpan {
    pub fn new(cols: usize) -> Self {
        Self { cols, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Echelon rows as big integers (pivot-ascending order).
    pub fn basis_rows(&self) -> Vec<Vec<BigInt>> {
        self.rows.iter().map(|r| r.data.to_big()).collect()
    }

    fn reduce(&self, v: &mut Cand) {
        let mut steps = 0usize;
        for row in &self.rows {
            let zero = match v {
                Cand::Small(vv) => vv[row.pivot] == 0,
                Cand::Big(vv) => vv[row.pivot].is_zero(),
            };
            if zero {
                continue;
            }
            eliminate(v, &row.data, row.pivot);
            steps += 1;
            if steps % 32 == 0 {
                v.normalize_content();
            }
        }
    }

    /// Insert a vector; when the dimension grows, returns the reduced
    /// primitive row that was added.
    fn insert_cand(&mut self, mut v: Cand) -> Option<Vec<BigInt>> {
        v.normalize_content();
        self.reduce(&mut v);
        let pivot = v.first_nonzero()?;
        v.normalize_content();
        v.flip_sign_to_positive(pivot);
        let new_data = match v {
            Cand::Small(vv) => RowData::Small(vv),
            Cand::Big(vv) => RowData::Big(vv),
        };
        // Back-reduce existing rows so the basis stays fully reduced.
        for row in &mut self.rows {
            if row.data.entry_is_zero(pivot) {
                continue;
            }
            let mut cand = Cand::from_big(row.data.to_big());
            eliminate(&mut cand, &new_data, pivot);
            cand.normalize_content();
            cand.flip_sign_to_positive(row.pivot);
            row.data = match cand {
                Cand::Small(vv) => RowData::Small(vv),
                Cand::Big(vv) => RowData::Big(vv),
            };
        }
        let reduced = new_data.to_big();
        let pos = self.rows.partition_point(|r| r.pivot < pivot);
        self.rows.insert(pos, ZRow { pivot, data: new_data });
        Some(reduced)
    }

    /// Insert an integer vector; returns true when the dimension grew.
    pub fn insert(&mut self, v: Vec<BigInt>) -> bool {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        self.insert_cand(Cand::from_big(v)).is_some()
    }

    /// Does the rational vector lie in the span?
    pub fn contains_rat(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let int = primitive_integer(v);
        if int.iter().all(|x| x.is_zero()) {
            return true;
        }
        let mut cand = Cand::from_big(int);
        self.reduce(&mut cand);
        cand.first_nonzero().is_none()
    }
}

/// Clear denominators and divide by the content: a primitive integer
/// vector spanning the same line.
pub fn primitive_integer(v: &[Rat]) -> Vec<BigInt> {
    let mut lcm = BigInt::from(1);
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let mut ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = BigInt::zero();
    let one = BigInt::from(1);
    for x in &ints {
        g = g.gcd(x);
        if g == one {
            return ints;
        }
    }
    if !g.is_zero() && g != one {
        for x in &mut ints {
            *x = &*x / &g;
        }
    }
    ints
}

/// Flatten a rational matrix row-major and scale to a primitive
/// integer vector (same line in the flattened space).
pub fn flatten_to_integer(m: &Matrix<Rat>) -> Vec<BigInt> {
    primitive_integer(m.entries())
}

/// Dimension of the smallest subspace of square matrices containing
/// `seed` and the identity, closed under right multiplication by each
/// generator. Returns `cap + 1` when the dimension exceeds `cap`.
pub fn span_closure(
    seed: &[Matrix<Rat>],
    generators: &[Matrix<Rat>],
    cap: usize,
) -> Result<usize, ExactError> {
    Ok(span_closure_basis(seed, generators, cap)?.0)
}

/// Like [`span_closure`], also returning the echelon basis of the
/// closure (flattened row-major) for membership tests.
pub fn span_closure_basis(
    seed: &[Matrix<Rat>],
    generators: &[Matrix<Rat>],
    cap: usize,
) -> Result<(usize, ZSpan), ExactError> {
    let n = match generators.first().or_else(|| seed.first()) {
        Some(m) => m.rows(),
        None => return Err(ExactError::DimensionMismatch("no matrices given".into())),
    };
    for m in seed.iter().chain(generators) {
        if m.rows() != n || m.cols() != n {
            return Err(ExactError::DimensionMismatch(format!(
                "expected {}x{}, got {}x{}",
                n,
                n,
                m.rows(),
                m.cols()
            )));
        }
    }
    // Scaling every matrix to a primitive integer one leaves the span
    // of each monomial product, hence the closure, unchanged.
    let gens: Vec<Vec<i128>> = generators
        .iter()
        .map(|g| {
            flatten_to_integer(g)
                .iter()
                .map(|x| i128::try_from(x).expect("generator entries exceed i128"))
                .collect()
        })
        .collect();

    let mut span = ZSpan::new(n * n);
    let mut queue: VecDeque<Vec<BigInt>> = VecDeque::new();

    let identity = Matrix::<Rat>::identity(n);
    if let Some(row) = span.insert_cand(Cand::from_big(flatten_to_integer(&identity))) {
        queue.push_back(row);
    }
    for s in seed {
        if span.dim() > cap {
            return Ok((cap + 1, span));
        }
        if let Some(row) = span.insert_cand(Cand::from_big(flatten_to_integer(s))) {
            queue.push_back(row);
        }
    }

    while let Some(v) = queue.pop_front() {
        for g in &gens {
            if span.dim() > cap {
                return Ok((cap + 1, span));
            }
            let product = right_multiply(&v, g, n);
            if let Some(row) = span.insert_cand(Cand::from_big(product)) {
                queue.push_back(row);
            }
        }
    }
    Ok((span.dim(), span))
}

/// A family of integer vectors with pairwise distinct leading
/// positions and leading coefficient +1 (a unit echelon). Membership
/// tests reduce greedily without any pivot scaling, so arithmetic
/// stays exact and growth is additive.
pub struct TriSpan {
    cols: usize,
    /// (leading position, vector), sorted by leading position.
    rows: Vec<(usize, Vec<i128>)>,
}

impl TriSpan {
    /// Build from members; fails when a leading coefficient is not 1
    /// or two members share a leading position.
    pub fn new(cols: usize, members: Vec<Vec<i128>>) -> Option<TriSpan> {
        let mut rows = Vec::with_capacity(members.len());
        for v in members {
            assert_eq!(v.len(), cols);
            let lead = v.iter().position(|&x| x != 0)?;
            if v[lead] != 1 {
                return None;
            }
            rows.push((lead, v));
        }
        rows.sort_by_key(|r| r.0);
        if rows.windows(2).any(|w| w[0].0 == w[1].0) {
            return None;
        }
        Some(TriSpan { cols, rows })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn contains_rat(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.cols);
        let int = primitive_integer(v);
        if int.iter().all(|x| x.is_zero()) {
            return true;
        }
        let mut cand = Cand::from_big(int);
        for (lead, row) in &self.rows {
            let coeff_zero = match &cand {
                Cand::Small(vv) => vv[*lead] == 0,
                Cand::Big(vv) => vv[*lead].is_zero(),
            };
            if coeff_zero {
                continue;
            }
            // cand := cand − c·row with c the current leading value;
            // unit pivots mean no rescaling of cand.
            let ok = if let Cand::Small(vv) = &mut cand {
                let c = vv[*lead];
                let mut scratch = vv.clone();
                let fits = (|| -> Option<()> {
                    for (x, &bx) in scratch[*lead..].iter_mut().zip(&row[*lead..]) {
                        if bx != 0 {
                            *x = x.checked_sub(c.checked_mul(bx)?)?;
                        }
                    }
                    Some(())
                })();
                if fits.is_some() {
                    *vv = scratch;
                    true
                } else {
                    false
                }
            } else {
                false
            };
            if !ok {
                let mut vv = cand.to_big();
                let c = vv[*lead].clone();
                for (x, &bx) in vv[*lead..].iter_mut().zip(&row[*lead..]) {
                    if bx != 0 {
                        *x -= &c * BigInt::from(bx);
                    }
                }
                cand = Cand::Big(vv);
            }
        }
        cand.first_nonzero().is_none()
    }
}

/// Echelon over F_p with p = 2^31 − 1 (Mersenne, for fast reduction).
pub const MERSENNE_P: u64 = (1 << 31) - 1;

#[inline]
fn mersenne_reduce(mut x: u64) -> u64 {
    x = (x & MERSENNE_P) + (x >> 31);
    x = (x & MERSENNE_P) + (x >> 31);
    if x >= MERSENNE_P {
        x - MERSENNE_P
    } else {
        x
    }
}

#[inline]
fn mod_mul_exact(a: u64, b: u64) -> u64 {
    let prod = a as u128 * b as u128;
    let lo = (prod & ((1u128 << 31) - 1)) as u64;
    let mid = ((prod >> 31) & ((1u128 << 31) - 1)) as u64;
    let hi = (prod >> 62) as u64;
    mersenne_reduce(lo + mid + hi)
}

fn mod_pow(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1u64;
    base %= MERSENNE_P;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul_exact(acc, base);
        }
        base = mod_mul_exact(base, base);
        exp >>= 1;
    }
    acc
}

fn mod_inv(a: u64) -> u64 {
    mod_pow(a, MERSENNE_P - 2)
}

/// Reduce a rational to F_p; `None` when the denominator vanishes.
fn rat_mod_p(x: &Rat) -> Option<u64> {
    let p = BigInt::from(MERSENNE_P);
    let num = ((x.numer() % &p) + &p) % &p;
    let den = ((x.denom() % &p) + &p) % &p;
    let num = u64::try_from(&num).ok()?;
    let den = u64::try_from(&den).ok()?;
    if den == 0 {
        return None;
    }
    Some(mod_mul_exact(num, mod_inv(den)))
}

struct ModSpan {
    cols: usize,
    /// Pivot-normalized rows (pivot value 1), sorted by pivot.
    rows: Vec<(usize, Vec<u64>)>,
}

impl ModSpan {
    fn new(cols: usize) -> Self {
        Self { cols, rows: Vec::new() }
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Insert, returning the reduced row when the dimension grew.
    fn insert(&mut self, mut v: Vec<u64>) -> Option<Vec<u64>> {
        assert_eq!(v.len(), self.cols);
        for (pivot, row) in &self.rows {
            let c = v[*pivot];
            if c == 0 {
                continue;
            }
            let neg = MERSENNE_P - c;
            for (x, &bx) in v[*pivot..].iter_mut().zip(&row[*pivot..]) {
                if bx != 0 {
                    *x = mersenne_reduce(*x + mod_mul_exact(neg, bx));
                }
            }
        }
        let pivot = v.iter().position(|&x| x != 0)?;
        let inv = mod_inv(v[pivot]);
        for x in v[pivot..].iter_mut() {
            if *x != 0 {
                *x = mod_mul_exact(*x, inv);
            }
        }
        let pos = self.rows.partition_point(|r| r.0 < pivot);
        self.rows.insert(pos, (pivot, v.clone()));
        Some(v)
    }
}

/// Dimension over F_p (p = 2^31 − 1) of the right-multiplication
/// closure of `seed` ∪ {1} under `generators`. This is a lower bound
/// for the dimension over Q. `None` when a denominator vanishes mod p.
pub fn span_closure_dim_mod_p(
    seed: &[Matrix<Rat>],
    generators: &[Matrix<Rat>],
    cap: usize,
) -> Option<usize> {
    let n = generators.first().or_else(|| seed.first())?.rows();
    let to_modp = |m: &Matrix<Rat>| -> Option<Vec<u64>> {
        m.entries().iter().map(rat_mod_p).collect()
    };
    let gens: Vec<Vec<u64>> = generators.iter().map(|g| to_modp(g)).collect::<Option<_>>()?;
    let mut span = ModSpan::new(n * n);
    let mut queue: VecDeque<Vec<u64>> = VecDeque::new();
    let id = Matrix::<Rat>::identity(n);
    if let Some(row) = span.insert(to_modp(&id)?) {
        queue.push_back(row);
    }
    for s in seed {
        if span.dim() > cap {
            return Some(cap + 1);
        }
        if let Some(row) = span.insert(to_modp(s)?) {
            queue.push_back(row);
        }
    }
    while let Some(v) = queue.pop_front() {
        for g in &gens {
            if span.dim() > cap {
                return Some(cap + 1);
            }
            let mut out = vec![0u64; n * n];
            for i in 0..n {
                for k in 0..n {
                    let a = v[i * n + k];
                    if a == 0 {
                        continue;
                    }
                    for j in 0..n {
                        let b = g[k * n + j];
                        if b != 0 {
                            out[i * n + j] =
                                mersenne_reduce(out[i * n + j] + mod_mul_exact(a, b));
                        }
                    }
                }
            }
            if let Some(row) = span.insert(out) {
                queue.push_back(row);
            }
        }
    }
    Some(span.dim())
}

/// Flattened matrix times generator (right multiplication), exact.
fn right_multiply(flat: &[BigInt], gen: &[i128], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n * n];
    for i in 0..n {
        for k in 0..n {
            let a = &flat[i * n + k];
            if a.is_zero() {
                continue;
            }
            for j in 0..n {
                let b = gen[k * n + j];
                if b != 0 {
                    out[i * n + j] += a * BigInt::from(b);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn mq(n: usize, vals: &[i64]) -> Matrix<Rat> {
        Matrix::from_fn(n, n, |i, j| rat(vals[i * n + j]))
    }

    #[test]
    fn closure_of_identity_is_scalars() {
        let dim = span_closure(&[], &[Matrix::identity(2)], 10).unwrap();
        assert_eq!(dim, 1);
    }

    #[test]
    fn closure_of_two_eigenvalue_diagonal_is_diagonal_algebra() {
        let d = mq(2, &[1, 0, 0, 2]);
        let dim = span_closure(&[], &[d], 10).unwrap();
        assert_eq!(dim, 2);
    }

    #[test]
    fn closure_of_elementary_nilpotents_is_full_matrix_algebra() {
        let e12 = mq(2, &[0, 1, 0, 0]);
        let e21 = mq(2, &[0, 0, 1, 0]);
        let dim = span_closure(&[], &[e12, e21], 10).unwrap();
        assert_eq!(dim, 4);
    }

    #[test]
    fn closure_respects_cap_with_sentinel() {
        let e12 = mq(2, &[0, 1, 0, 0]);
        let e21 = mq(2, &[0, 0, 1, 0]);
        let dim = span_closure(&[], &[e12, e21], 3).unwrap();
        assert_eq!(dim, 4); // cap + 1 sentinel
    }

    #[test]
    fn closure_is_generator_order_independent() {
        let a = mq(3, &[0, 1, 0, 0, 0, 1, 0, 0, 0]);
        let b = mq(3, &[2, 0, 0, 0, 3, 0, 0, 0, 5]);
        let d1 = span_closure(&[], &[a.clone(), b.clone()], 20).unwrap();
        let d2 = span_closure(&[], &[b, a], 20).unwrap();
        assert_eq!(d1, d2);
    }

    #[test]
    fn closure_rejects_size_disagreement() {
        let a = mq(2, &[1, 0, 0, 1]);
        let b = Matrix::<Rat>::identity(3);
        assert!(matches!(
            span_closure(&[], &[a, b], 10),
            Err(ExactError::DimensionMismatch(_))
        ));
    }

    #[test]
    fn zspan_membership() {
        let mut s = ZSpan::new(3);
        assert!(s.insert(vec![BigInt::from(1), BigInt::from(2), BigInt::from(0)]));
        assert!(s.insert(vec![BigInt::from(0), BigInt::from(1), BigInt::from(1)]));
        assert!(!s.insert(vec![BigInt::from(1), BigInt::from(3), BigInt::from(1)]));
        assert_eq!(s.dim(), 2);
        let v = [rat(2), rat(4), rat(0)];
        assert!(s.contains_rat(&v));
        let w = [rat(1), rat(0), rat(0)];
        assert!(!s.contains_rat(&w));
    }
}
