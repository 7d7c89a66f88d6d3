//! Exact-rational structure-constant algebras built from multiplication
//! tables: radical via the trace-form kernel, center and central primitive
//! idempotents via polynomial factorization, identification of every simple
//! component, and idempotent lifting back through the radical.
//!
//! Everything is arbitrary-precision rational arithmetic; there is no
//! floating point and no randomness in this module.

pub mod hilbert;

use crate::cayley::CayleyTable;
use crate::linalg::{unit_vec, vec_add, vec_is_zero, vec_scale, vec_sub, zero_vec, Matrix, RowSpace, Vector};
use crate::poly::{PolyError, QPoly};
use crate::{rat, Rat};
use num::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("algebra is neither associative nor alternative; no decomposition available")]
    NonAssociativeUnsupported,
    #[error("polynomial factorization failed: {0}")]
    Factorization(#[from] PolyError),
    #[error("component is not simple: {0}")]
    NotSimple(String),
    #[error("failed to split the center with the deterministic generator scan")]
    CenterSplitFailed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Provenance {
    Semigroup,
    Loop,
    Quotient,
    Component,
}

/// A finite-dimensional Q-algebra given by structure constants over a basis.
#[derive(Debug, Clone)]
pub struct StructureAlgebra {
    pub dim: usize,
    pub names: Vec<String>,
    /// product[i][j] = coordinates of e_i * e_j.
    pub product: Vec<Vec<Vector>>,
    pub unity: Vector,
    /// True when the unity is an adjoined basis element rather than an
    /// element of the input table.
    pub unity_adjoined: bool,
    pub associative: bool,
    pub provenance: Provenance,
}

impl StructureAlgebra {
    pub fn mul(&self, x: &[Rat], y: &[Rat]) -> Vector {
        let mut out = zero_vec(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (k, pk) in self.product[i][j].iter().enumerate() {
                    if !pk.is_zero() {
                        out[k] += pk * &c;
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by x in the chosen basis; applying it to
    /// coordinates of y yields coordinates of x*y.
    pub fn left_regular(&self, x: &[Rat]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(x, &unit_vec(self.dim, j))).collect();
        Matrix::from_rows(cols).transpose()
    }

    pub fn right_regular(&self, x: &[Rat]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(&unit_vec(self.dim, j), x)).collect();
        Matrix::from_rows(cols).transpose()
    }

    pub fn trace_of_left(&self, x: &[Rat]) -> Rat {
        // tr L_x = sum_i coefficient of e_i in x*e_i
        let mut t = Rat::zero();
        for i in 0..self.dim {
            for (j, xj) in x.iter().enumerate() {
                if !xj.is_zero() {
                    t += &self.product[j][i][i] * xj;
                }
            }
        }
        t
    }

    pub fn is_idempotent(&self, x: &[Rat]) -> bool {
        self.mul(x, x) == x.to_vec()
    }

    /// p(x), using the algebra unity for the constant term.
    pub fn eval_poly(&self, p: &QPoly, x: &[Rat]) -> Vector {
        let mut out = zero_vec(self.dim);
        // Horner from the top coefficient
        for c in p.coeffs.iter().rev() {
            out = self.mul(&out, x);
            if !c.is_zero() {
                out = vec_add(&out, &vec_scale(&self.unity, c));
            }
        }
        out
    }

    /// Minimal polynomial of x (monic), via power iteration in exact
    /// arithmetic.
    pub fn minpoly(&self, x: &[Rat]) -> QPoly {
        let mut powers: Vec<Vector> = vec![self.unity.clone()];
        let mut span = Matrix::from_rows(vec![self.unity.clone()]);
        loop {
            let next = self.mul(powers.last().unwrap(), x);
            // is `next` in the span of the powers so far?
            let cols = Matrix::from_rows(powers.clone()).transpose();
            if let Some(coords) = cols.solve(&next) {
                // x^k = sum coords_i x^i  =>  minpoly = x^k - sum coords_i x^i
                let mut coeffs = coords;
                for c in coeffs.iter_mut() {
                    *c = -c.clone();
                }
                coeffs.push(Rat::one());
                return QPoly::from_coeffs(coeffs);
            }
            span.data.push(next.clone());
            span.rows += 1;
            powers.push(next);
        }
    }

    /// Associator (e_i e_j) e_k - e_i (e_j e_k).
    pub fn associator(&self, i: usize, j: usize, k: usize) -> Vector {
        let ei = unit_vec(self.dim, i);
        let ej = unit_vec(self.dim, j);
        let ek = unit_vec(self.dim, k);
        let left = self.mul(&self.mul(&ei, &ej), &ek);
        let right = self.mul(&ei, &self.mul(&ej, &ek));
        vec_sub(&left, &right)
    }
}

/// The rational table algebra of a validated semigroup or loop; a unity basis
/// element is adjoined exactly when the table has no two-sided identity.
pub fn build_algebra(t: &CayleyTable) -> StructureAlgebra {
    let n = t.order;
    let adjoin = t.identity.is_none();
    let dim = if adjoin { n + 1 } else { n };
    let mut product = vec![vec![zero_vec(dim); dim]; dim];
    for i in 0..n {
        for j in 0..n {
            product[i][j] = unit_vec(dim, t.table[i][j]);
        }
    }
    if adjoin {
        for i in 0..dim {
            product[n][i] = unit_vec(dim, i);
            product[i][n] = unit_vec(dim, i);
        }
    }
    let unity = if adjoin { unit_vec(dim, n) } else { unit_vec(dim, t.identity.unwrap()) };
    let mut names = t.names.clone();
    if adjoin {
        names.push("1#".into());
    }
    let provenance = match t.kind {
        crate::cayley::TableKind::SemigroupCandidate => Provenance::Semigroup,
        crate::cayley::TableKind::LoopCandidate => Provenance::Loop,
    };
    let mut a = StructureAlgebra {
        dim,
        names,
        product,
        unity,
        unity_adjoined: adjoin,
        associative: true,
        provenance,
    };
    a.associative = alternative_check(&a).associative;
    a
}

#[derive(Debug, Clone, Serialize)]
pub struct AlternativeReport {
    pub alternative: bool,
    pub associative: bool,
    /// Basis triple witnessing failure of alternativity (or, when the algebra
    /// is alternative but not associative, a nonvanishing associator).
    pub witness: Option<(usize, usize, usize)>,
}

/// Decide associativity and alternativity from basis associators. Since the
/// associator is trilinear, the algebra is alternative iff the associator is
/// antisymmetric in each adjacent pair of arguments on all basis triples.
pub fn alternative_check(a: &StructureAlgebra) -> AlternativeReport {
    let n = a.dim;
    let mut associative = true;
    let mut nonzero_witness = None;
    let mut assoc = vec![vec![vec![Vector::new(); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = a.associator(i, j, k);
                if !vec_is_zero(&v) {
                    associative = false;
                    if nonzero_witness.is_none() {
                        nonzero_witness = Some((i, j, k));
                    }
                }
                assoc[i][j][k] = v;
            }
        }
    }
    if associative {
        return AlternativeReport { alternative: true, associative: true, witness: None };
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let swap_first = vec_add(&assoc[i][j][k], &assoc[j][i][k]);
                if !vec_is_zero(&swap_first) {
                    return AlternativeReport {
                        alternative: false,
                        associative: false,
                        witness: Some((i, j, k)),
                    };
                }
                let swap_last = vec_add(&assoc[i][j][k], &assoc[i][k][j]);
                if !vec_is_zero(&swap_last) {
                    return AlternativeReport {
                        alternative: false,
                        associative: false,
                        witness: Some((i, j, k)),
                    };
                }
            }
        }
    }
    AlternativeReport { alternative: true, associative: false, witness: nonzero_witness }
}

#[derive(Debug, Clone)]
pub struct RadicalSplit {
    /// Basis of the radical, in algebra coordinates.
    pub radical_basis: Vec<Vector>,
    pub radical_dim: usize,
    pub radical_central: bool,
    /// Least k with J^k = 0 (1 when the radical is zero).
    pub nilpotency_index: usize,
    /// Complement representatives in algebra coordinates; the i-th quotient
    /// basis vector is the image of complement_basis[i].
    pub complement_basis: Vec<Vector>,
    /// Projection matrix: quotient coordinates of an algebra element.
    pub projection: Matrix,
    pub semisimple_quotient: StructureAlgebra,
}

impl RadicalSplit {
    /// Quotient coordinates of an algebra element.
    pub fn project(&self, v: &[Rat]) -> Vector {
        self.projection.apply(v)
    }

    /// Algebra representative of a quotient element.
    pub fn embed(&self, v: &[Rat]) -> Vector {
        let mut out = zero_vec(self.projection.cols);
        for (c, b) in v.iter().zip(&self.complement_basis) {
            if !c.is_zero() {
                out = vec_add(&out, &vec_scale(b, c));
            }
        }
        out
    }
}

/// Radical as the kernel of the trace form (x,y) -> tr(L_x L_y), plus the
/// semisimple quotient on a complement basis. For alternative non-associative
/// algebras the same criterion is used; the caller is expected to treat the
/// result as coarse decomposition data.
pub fn radical_split(a: &StructureAlgebra) -> Result<RadicalSplit, AlgebraError> {
    let report = alternative_check(a);
    if !report.alternative {
        return Err(AlgebraError::NonAssociativeUnsupported);
    }
    let n = a.dim;
    let ls: Vec<Matrix> = (0..n).map(|i| a.left_regular(&unit_vec(n, i))).collect();
    let mut gram = Matrix::zero(n, n);
    for i in 0..n {
        for j in i..n {
            let mut t = Rat::zero();
            for r in 0..n {
                for c in 0..n {
                    if !ls[i].data[r][c].is_zero() && !ls[j].data[c][r].is_zero() {
                        t += &ls[i].data[r][c] * &ls[j].data[c][r];
                    }
                }
            }
            gram.data[i][j] = t.clone();
            gram.data[j][i] = t;
        }
    }
    let radical_basis = gram.kernel();
    let radical_dim = radical_basis.len();
    // nilpotency index: J, J^2, ... until zero
    let mut nilpotency_index = 1;
    let mut layer = radical_basis.clone();
    while !layer.is_empty() {
        nilpotency_index += 1;
        let mut next = Vec::new();
        for x in &layer {
            for r in &radical_basis {
                let p = a.mul(x, r);
                if !vec_is_zero(&p) {
                    next.push(p);
                }
            }
        }
        let rs = RowSpace::new(&next, n);
        if rs.dim() == 0 {
            break;
        }
        // re-echelonize to a basis to keep the layer small
        let mut m = Matrix::from_rows(next);
        let pivots = m.rref();
        m.data.truncate(pivots.len());
        layer = m.data;
        if nilpotency_index > n + 1 {
            unreachable!("radical failed to nilpotate; trace-form kernel was wrong");
        }
    }
    if radical_dim == 0 {
        nilpotency_index = 1;
    }
    let radical_central = radical_basis.iter().all(|r| {
        (0..n).all(|i| {
            let e = unit_vec(n, i);
            a.mul(r, &e) == a.mul(&e, r)
        })
    });
    // complement: standard basis vectors extending the radical to a full basis
    let mut span = RowSpace::new(&radical_basis, n);
    let mut complement_idx = Vec::new();
    for i in 0..n {
        if span.dim() == n {
            break;
        }
        let e = unit_vec(n, i);
        if !span.contains(&e) {
            complement_idx.push(i);
            let mut vs: Vec<Vector> = radical_basis.clone();
            vs.extend(complement_idx.iter().map(|&k| unit_vec(n, k)));
            span = RowSpace::new(&vs, n);
        }
    }
    let q = complement_idx.len();
    debug_assert_eq!(q + radical_dim, n);
    let complement_basis: Vec<Vector> = complement_idx.iter().map(|&k| unit_vec(n, k)).collect();
    // change of basis: columns are complement then radical
    let mut cols: Vec<Vector> = complement_basis.clone();
    cols.extend(radical_basis.iter().cloned());
    let basis_matrix = Matrix::from_rows(cols).transpose();
    let inv = basis_matrix.inverse().expect("complement + radical is a basis");
    let projection = Matrix::from_rows(inv.data[..q].to_vec());
    // quotient structure constants
    let mut product = vec![vec![zero_vec(q); q]; q];
    for i in 0..q {
        for j in 0..q {
            let p = a.mul(&complement_basis[i], &complement_basis[j]);
            product[i][j] = projection.apply(&p);
        }
    }
    let unity = projection.apply(&a.unity);
    let names: Vec<String> = complement_idx.iter().map(|&k| a.names[k].clone()).collect();
    let semisimple_quotient = StructureAlgebra {
        dim: q,
        names,
        product,
        unity,
        unity_adjoined: false,
        associative: a.associative,
        provenance: Provenance::Quotient,
    };
    Ok(RadicalSplit {
        radical_basis,
        radical_dim,
        radical_central,
        nilpotency_index,
        complement_basis,
        projection,
        semisimple_quotient,
    })
}

/// Basis of the center, as coordinate vectors.
pub fn center_basis(a: &StructureAlgebra) -> Vec<Vector> {
    let n = a.dim;
    let mut rows = Vec::with_capacity(n * n);
    for i in 0..n {
        let e = unit_vec(n, i);
        let l = a.left_regular(&e);
        let r = a.right_regular(&e);
        for k in 0..n {
            rows.push(vec_sub(&l.data[k], &r.data[k]));
        }
    }
    Matrix::from_rows(rows).kernel()
}

#[derive(Debug, Clone)]
pub struct CentralDecomposition {
    /// Central primitive idempotents of the input, in its coordinates.
    pub idempotents: Vec<Vector>,
    pub components: Vec<ComponentData>,
}

#[derive(Debug, Clone)]
pub struct ComponentData {
    pub algebra: StructureAlgebra,
    /// Basis of the component inside the parent, in parent coordinates.
    pub embedding: Vec<Vector>,
    pub idempotent: Vector,
}

fn solve_in_span(span_cols: &Matrix, v: &[Rat]) -> Option<Vector> {
    span_cols.solve(v)
}

/// Split a semisimple algebra along its central primitive idempotents.
/// The center is split by the deterministic generator scan: each center
/// basis element in turn, then Vandermonde-weighted combinations, factoring
/// minimal polynomials over Q.
pub fn central_decomposition(
    ss: &StructureAlgebra,
) -> Result<CentralDecomposition, AlgebraError> {
    let z = center_basis(ss);
    let mut final_blocks: Vec<Vector> = Vec::new();
    let mut queue: Vec<Vector> = vec![ss.unity.clone()];
    while let Some(e) = queue.pop() {
        match split_block(ss, &z, &e)? {
            None => final_blocks.push(e),
            Some(parts) => queue.extend(parts),
        }
    }
    // deterministic order: sort by coordinate vector
    final_blocks.sort_by(|a, b| {
        a.iter()
            .zip(b.iter())
            .find_map(|(x, y)| {
                let c = x.cmp(y);
                if c == std::cmp::Ordering::Equal {
                    None
                } else {
                    Some(c)
                }
            })
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    // verify the resolution of unity exactly
    let mut total = zero_vec(ss.dim);
    for e in &final_blocks {
        total = vec_add(&total, e);
    }
    assert_eq!(total, ss.unity, "central idempotents must sum to unity");
    for (i, a) in final_blocks.iter().enumerate() {
        for (j, b) in final_blocks.iter().enumerate() {
            let p = ss.mul(a, b);
            if i == j {
                assert_eq!(&p, a, "central idempotent not idempotent");
            } else {
                assert!(vec_is_zero(&p), "central idempotents not orthogonal");
            }
        }
    }
    let mut components = Vec::new();
    for e in &final_blocks {
        components.push(build_component(ss, e));
    }
    Ok(CentralDecomposition { idempotents: final_blocks, components })
}

/// Try to split the block with idempotent e. Returns None when the block's
/// center is a field (block is final), Some(sub-idempotents) otherwise.
fn split_block(
    ss: &StructureAlgebra,
    z: &[Vector],
    e: &Vector,
) -> Result<Option<Vec<Vector>>, AlgebraError> {
    // center elements of the block
    let ze: Vec<Vector> = z.iter().map(|zi| ss.mul(zi, e)).collect();
    let block_center = RowSpace::new(&ze, ss.dim);
    let d = block_center.dim();
    if d <= 1 {
        return Ok(None);
    }
    // candidate generators: each z_i e, then Vandermonde combinations
    let mut candidates: Vec<Vector> = ze.iter().filter(|v| !vec_is_zero(v)).cloned().collect();
    let limit = 4 * d * d * d + 8;
    for k in 1..=limit {
        let mut w = zero_vec(ss.dim);
        let mut pw = Rat::one();
        for v in &ze {
            w = vec_add(&w, &vec_scale(v, &pw));
            pw *= rat(k as i64);
        }
        candidates.push(w);
    }
    for w in &candidates {
        let m = block_minpoly(ss, e, w);
        let factors = m.factor()?;
        if factors.len() > 1 || factors[0].1 > 1 {
            // reducible (semisimple => squarefree, but guard anyway): split by CRT
            let parts = crt_idempotents(ss, e, w, &factors);
            return Ok(Some(parts));
        }
        if m.degree() == d {
            // irreducible of full center degree: the block center is a field
            return Ok(None);
        }
    }
    Err(AlgebraError::CenterSplitFailed)
}

/// Minimal polynomial of w inside the block with unity e.
fn block_minpoly(ss: &StructureAlgebra, e: &Vector, w: &Vector) -> QPoly {
    let mut powers: Vec<Vector> = vec![e.clone()];
    loop {
        let next = ss.mul(powers.last().unwrap(), w);
        let cols = Matrix::from_rows(powers.clone()).transpose();
        if let Some(coords) = solve_in_span(&cols, &next) {
            let mut coeffs = coords;
            for c in coeffs.iter_mut() {
                *c = -c.clone();
            }
            coeffs.push(Rat::one());
            return QPoly::from_coeffs(coeffs);
        }
        powers.push(next);
    }
}

/// Orthogonal idempotents of the block from the coprime factors of the
/// minimal polynomial of w: for factors f_k of m, E_k = h_k(w)·e where
/// h_k = (m/f_k) · ((m/f_k)^{-1} mod f_k).
fn crt_idempotents(
    ss: &StructureAlgebra,
    e: &Vector,
    w: &Vector,
    factors: &[(QPoly, usize)],
) -> Vec<Vector> {
    let m = factors.iter().fold(QPoly::one(), |acc, (f, k)| {
        let mut a = acc;
        for _ in 0..*k {
            a = a.mul(f);
        }
        a
    });
    let mut out = Vec::new();
    for (f, k) in factors {
        let mut fk = QPoly::one();
        for _ in 0..*k {
            fk = fk.mul(f);
        }
        let cofactor = m.div_exact(&fk);
        let (g, u, _) = cofactor.xgcd(&fk);
        // g must be a nonzero constant (factors are pairwise coprime)
        let ginv = Rat::one() / g.coeffs[0].clone();
        let h = cofactor.mul(&u.scale(&ginv));
        let idem = eval_poly_in_block(ss, e, w, &h);
        out.push(idem);
    }
    out
}

fn eval_poly_in_block(ss: &StructureAlgebra, e: &Vector, w: &Vector, p: &QPoly) -> Vector {
    let mut out = zero_vec(ss.dim);
    for c in p.coeffs.iter().rev() {
        out = ss.mul(&out, w);
        if !c.is_zero() {
            out = vec_add(&out, &vec_scale(e, c));
        }
    }
    out
}

fn build_component(ss: &StructureAlgebra, e: &Vector) -> ComponentData {
    // basis of the two-sided ideal e·ss
    let mut embedding: Vec<Vector> = Vec::new();
    let mut span = RowSpace::new(&[], ss.dim);
    for j in 0..ss.dim {
        let v = ss.mul(e, &unit_vec(ss.dim, j));
        if !span.contains(&v) {
            embedding.push(v.clone());
            let mut all = embedding.clone();
            all.push(v);
            span = RowSpace::new(&embedding, ss.dim);
        }
    }
    let d = embedding.len();
    let cols = Matrix::from_rows(embedding.clone()).transpose();
    let coords = |v: &[Rat]| -> Vector {
        solve_in_span(&cols, v).expect("component is closed under multiplication")
    };
    let mut product = vec![vec![zero_vec(d); d]; d];
    for i in 0..d {
        for j in 0..d {
            product[i][j] = coords(&ss.mul(&embedding[i], &embedding[j]));
        }
    }
    let unity = coords(e);
    let names = (0..d).map(|i| format!("c{}", i)).collect();
    let algebra = StructureAlgebra {
        dim: d,
        names,
        product,
        unity,
        unity_adjoined: false,
        associative: ss.associative,
        provenance: Provenance::Component,
    };
    ComponentData { algebra, embedding, idempotent: e.clone() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ComponentKind {
    Field,
    QuaternionDefinite,
    QuaternionIndefiniteDivision,
    MatrixTwoOverQ,
    MatrixOther,
    OctonionDefinite,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum UnitClassTag {
    Finite,
    VirtuallyZ,
    VirtuallyFree,
    FuchsianLike,
    ContainsZ2,
    Indeterminate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnitClass {
    pub tag: UnitClassTag,
    pub justification: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentDescriptor {
    #[serde(skip)]
    pub center_minpoly: QPoly,
    pub center_minpoly_text: String,
    /// (real embeddings, conjugate pairs of complex embeddings) of the center.
    pub signature: (usize, usize),
    pub dim_over_center: usize,
    pub kind: ComponentKind,
    #[serde(skip)]
    pub quaternion_invariants: Option<(Rat, Rat)>,
    pub unit_class: UnitClass,
}

/// Identify a simple component: center field, signature, matrix size, and the
/// quaternion/octonion fine structure where applicable.
pub fn component_descriptor(b: &StructureAlgebra) -> Result<ComponentDescriptor, AlgebraError> {
    let z = center_basis(b);
    let d = z.len();
    // find a generator of the center with irreducible minpoly of degree d
    let mut gen_poly: Option<QPoly> = None;
    let mut candidates: Vec<Vector> = z.iter().filter(|v| !vec_is_zero(v)).cloned().collect();
    let limit = 4 * d * d * d + 8;
    for k in 1..=limit {
        let mut w = zero_vec(b.dim);
        let mut pw = Rat::one();
        for v in &z {
            w = vec_add(&w, &vec_scale(v, &pw));
            pw *= rat(k as i64);
        }
        candidates.push(w);
    }
    for w in &candidates {
        let m = b.minpoly(w);
        if !m.is_irreducible()? {
            return Err(AlgebraError::NotSimple(format!(
                "center element has reducible minimal polynomial {}",
                m.to_string_pretty()
            )));
        }
        if m.degree() == d {
            gen_poly = Some(m);
            break;
        }
    }
    let center_minpoly = gen_poly.ok_or(AlgebraError::CenterSplitFailed)?;
    let deg = center_minpoly.degree();
    let r1 = center_minpoly.real_root_count();
    let r2 = (deg - r1) / 2;
    assert_eq!(r1 + 2 * r2, deg);
    if b.dim % deg != 0 {
        return Err(AlgebraError::NotSimple("dimension not divisible by center degree".into()));
    }
    let dim_over_center = b.dim / deg;
    let mut quaternion_invariants = None;
    let kind = if !b.associative {
        if dim_over_center == 8 && deg == 1 {
            match octonion_definite(b) {
                Some(true) => ComponentKind::OctonionDefinite,
                _ => ComponentKind::Other,
            }
        } else {
            ComponentKind::Other
        }
    } else {
        let m2 = dim_over_center;
        let m = (1..=m2).find(|k| k * k == m2);
        match m {
            Some(1) => ComponentKind::Field,
            Some(2) if deg == 1 => {
                let (a, bb, definite) = quaternion_analysis(b)?;
                quaternion_invariants = Some((a.clone(), bb.clone()));
                if definite {
                    ComponentKind::QuaternionDefinite
                } else if hilbert::splits_everywhere(&a, &bb) {
                    ComponentKind::MatrixTwoOverQ
                } else {
                    ComponentKind::QuaternionIndefiniteDivision
                }
            }
            Some(2) => ComponentKind::Other,
            Some(_) => ComponentKind::MatrixOther,
            None => ComponentKind::Other,
        }
    };
    let unit_class = unit_class_of(kind, (r1, r2));
    Ok(ComponentDescriptor {
        center_minpoly_text: center_minpoly.to_string_pretty(),
        center_minpoly,
        signature: (r1, r2),
        dim_over_center,
        kind,
        quaternion_invariants,
        unit_class,
    })
}

/// Commensurability class of the unit group of any Z-order in the component.
pub fn unit_class_of(kind: ComponentKind, signature: (usize, usize)) -> UnitClass {
    let (r1, r2) = signature;
    match kind {
        ComponentKind::Field => {
            let rank = r1 + r2 - 1;
            let tag = match rank {
                0 => UnitClassTag::Finite,
                1 => UnitClassTag::VirtuallyZ,
                _ => UnitClassTag::ContainsZ2,
            };
            UnitClass {
                tag,
                justification: format!(
                    "number field with signature ({}, {}); unit rank {}",
                    r1, r2, rank
                ),
            }
        }
        ComponentKind::QuaternionDefinite => UnitClass {
            tag: UnitClassTag::Finite,
            justification: "totally definite quaternion algebra over Q".into(),
        },
        ComponentKind::MatrixTwoOverQ => UnitClass {
            tag: UnitClassTag::VirtuallyFree,
            justification: "2x2 matrices over Q; units commensurable with a free group".into(),
        },
        ComponentKind::QuaternionIndefiniteDivision => UnitClass {
            tag: UnitClassTag::FuchsianLike,
            justification: "indefinite rational division quaternion algebra".into(),
        },
        ComponentKind::MatrixOther => UnitClass {
            tag: UnitClassTag::ContainsZ2,
            justification: "matrix component of size at least 3 (or over a larger field)".into(),
        },
        ComponentKind::OctonionDefinite => UnitClass {
            tag: UnitClassTag::Finite,
            justification: "definite octonion component; loop of units is finite".into(),
        },
        ComponentKind::Other => UnitClass {
            tag: UnitClassTag::Indeterminate,
            justification: "component outside the identified shapes".into(),
        },
    }
}

/// Trace-zero subspace basis, via the left-regular trace functional.
fn trace_zero_subspace(b: &StructureAlgebra) -> Vec<Vector> {
    let row: Vector = (0..b.dim).map(|i| b.trace_of_left(&unit_vec(b.dim, i))).collect();
    Matrix::from_rows(vec![row]).kernel()
}

/// The scalar q with x^2 = q * unity, if x^2 is a multiple of unity.
fn square_scalar(b: &StructureAlgebra, x: &[Rat]) -> Option<Rat> {
    let sq = b.mul(x, x);
    // find scalar: sq = q * unity
    let nz = b.unity.iter().position(|c| !c.is_zero())?;
    let q = &sq[nz] / &b.unity[nz];
    if sq == vec_scale(&b.unity, &q) {
        Some(q)
    } else {
        None
    }
}

/// Diagonalize the restriction of x -> x^2 (a quadratic form times unity) on
/// the span of `basis`; returns an orthogonal basis and the diagonal scalars.
fn diagonalize_square_form(
    b: &StructureAlgebra,
    basis: &[Vector],
) -> Option<(Vec<Vector>, Vec<Rat>)> {
    let mut rest: Vec<Vector> = basis.to_vec();
    let mut ortho = Vec::new();
    let mut diag = Vec::new();
    let q_of = |v: &Vector| square_scalar(b, v);
    let bilinear = |x: &Vector, y: &Vector| -> Option<Rat> {
        // B(x,y) = (Q(x+y) - Q(x) - Q(y)) / 2
        let qxy = square_scalar(b, &vec_add(x, y))?;
        let qx = square_scalar(b, x)?;
        let qy = square_scalar(b, y)?;
        Some((qxy - qx - qy) / rat(2))
    };
    while !rest.is_empty() {
        // pick an anisotropic vector among the basis and pairwise sums
        let mut pick: Option<Vector> = None;
        'outer: for (i, v) in rest.iter().enumerate() {
            if !q_of(v)?.is_zero() {
                pick = Some(v.clone());
                break;
            }
            for w in rest.iter().skip(i + 1) {
                let s = vec_add(v, w);
                if !q_of(&s)?.is_zero() {
                    pick = Some(s);
                    break 'outer;
                }
            }
        }
        let v = match pick {
            Some(v) => v,
            None => {
                // totally isotropic remainder: the form is degenerate here,
                // which cannot happen for quaternion/octonion trace-zero parts
                return None;
            }
        };
        let qv = q_of(&v)?;
        // project the rest orthogonally to v and drop one dimension
        let mut next = Vec::new();
        let mut span = RowSpace::new(&[v.clone()], b.dim);
        for w in &rest {
            let bw = bilinear(&v, w)?;
            let proj = vec_sub(w, &vec_scale(&v, &(bw / qv.clone())));
            if !span.contains(&proj) {
                next.push(proj.clone());
                let mut all = vec![v.clone()];
                all.extend(ortho.iter().cloned());
                all.extend(next.iter().cloned());
                span = RowSpace::new(&all, b.dim);
            }
        }
        ortho.push(v);
        diag.push(qv);
        rest = next;
    }
    Some((ortho, diag))
}

/// Standard invariants (a, b) of a 4-dimensional central simple algebra over
/// Q, plus whether the norm form is definite (a < 0 and b < 0).
fn quaternion_analysis(b: &StructureAlgebra) -> Result<(Rat, Rat, bool), AlgebraError> {
    let v = trace_zero_subspace(b);
    if v.len() != 3 {
        return Err(AlgebraError::NotSimple("trace-zero subspace is not 3-dimensional".into()));
    }
    let (_, diag) = diagonalize_square_form(b, &v)
        .ok_or_else(|| AlgebraError::NotSimple("norm form degenerate on trace-zero part".into()))?;
    if diag.len() != 3 {
        return Err(AlgebraError::NotSimple("norm form did not diagonalize".into()));
    }
    let a = diag[0].clone();
    let bb = diag[1].clone();
    let definite = a.is_negative() && bb.is_negative() && diag[2].is_negative();
    Ok((a, bb, definite))
}

/// True when the 8-dimensional component over Q has positive definite norm
/// form on its 7-dimensional trace-zero part.
fn octonion_definite(b: &StructureAlgebra) -> Option<bool> {
    let v = trace_zero_subspace(b);
    if v.len() != 7 {
        return None;
    }
    let (_, diag) = diagonalize_square_form(b, &v)?;
    if diag.len() != 7 {
        return None;
    }
    // x^2 = q(x)·1 with q < 0 means the norm form -q is positive definite
    Some(diag.iter().all(|q| q.is_negative()))
}

/// Deterministic search for a nonzero nilpotent in a 4-dimensional component:
/// integer combinations of the trace-zero basis up to the given height.
/// Used to cross-check the Hilbert-symbol split/division decision.
pub fn find_nilpotent(b: &StructureAlgebra, height: i64) -> Option<Vector> {
    let v = trace_zero_subspace(b);
    if v.len() != 3 {
        return None;
    }
    for c0 in -height..=height {
        for c1 in -height..=height {
            for c2 in -height..=height {
                if c0 == 0 && c1 == 0 && c2 == 0 {
                    continue;
                }
                let mut x = vec_scale(&v[0], &rat(c0));
                x = vec_add(&x, &vec_scale(&v[1], &rat(c1)));
                x = vec_add(&x, &vec_scale(&v[2], &rat(c2)));
                if vec_is_zero(&x) {
                    continue;
                }
                if vec_is_zero(&b.mul(&x, &x)) {
                    return Some(x);
                }
            }
        }
    }
    None
}

/// Lift the central primitive idempotents of the semisimple quotient to
/// orthogonal idempotents of the full algebra, by sequential corner lifting:
/// each representative is squeezed into the corner (1-s)A(1-s) of the sum s
/// of the idempotents already lifted, then Newton-iterated (e <- 3e^2 - 2e^3)
/// until idempotent.
pub fn lift_idempotents(
    a: &StructureAlgebra,
    split: &RadicalSplit,
    quotient_idempotents: &[Vector],
) -> Vec<Vector> {
    let n = a.dim;
    let mut lifted: Vec<Vector> = Vec::new();
    let mut s = zero_vec(n);
    for qe in quotient_idempotents {
        let rep = split.embed(qe);
        let corner = vec_sub(&a.unity, &s);
        let mut e = a.mul(&a.mul(&corner, &rep), &corner);
        let mut guard = 0;
        while !a.is_idempotent(&e) {
            // 3e^2 - 2e^3
            let e2 = a.mul(&e, &e);
            let e3 = a.mul(&e2, &e);
            e = vec_sub(&vec_scale(&e2, &rat(3)), &vec_scale(&e3, &rat(2)));
            guard += 1;
            assert!(guard <= n + 2, "idempotent lifting failed to converge");
        }
        debug_assert_eq!(split.project(&e), *qe, "lift must project onto its idempotent");
        s = vec_add(&s, &e);
        lifted.push(e);
    }
    // the deficiency 1 - sum is an idempotent inside the radical, hence zero
    assert_eq!(s, a.unity, "lifted idempotents must sum to unity");
    lifted
}

/// Full pipeline: algebra, radical split, central decomposition of the
/// quotient, and a descriptor per component.
#[derive(Debug, Clone)]
pub struct AlgebraReport {
    pub algebra: StructureAlgebra,
    pub split: RadicalSplit,
    pub decomposition: CentralDecomposition,
    pub descriptors: Vec<ComponentDescriptor>,
}

pub fn analyze_table(t: &CayleyTable) -> Result<AlgebraReport, AlgebraError> {
    let algebra = build_algebra(t);
    let split = radical_split(&algebra)?;
    let decomposition = central_decomposition(&split.semisimple_quotient)?;
    let mut descriptors = Vec::with_capacity(decomposition.components.len());
    for c in &decomposition.components {
        descriptors.push(component_descriptor(&c.algebra)?);
    }
    Ok(AlgebraReport { algebra, split, decomposition, descriptors })
}
