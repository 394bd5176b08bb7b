//! The Kodaira-Spencer rank certificate for the family of 6-nodal quartics.
//!
//! A tangent vector to the family is a pair `(Ḟ, Ṗ)`: a first-order change
//! of the quartic inside the space of quartics nodal at `P1..P5`, and a
//! first-order motion of `P0` in the chart `x3 = 1`. Each one is pushed
//! through the whole construction over `F_p[ε]/(ε²)`, and the ε-parts of
//! the three quadrics give one row of the matrix. The remaining rows span
//! the tangent space to the `GL(3) × PGL(5)` orbit of the quadric triple.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::canonical::{canonical_quadrics, cubic_system, cubic_system_at, CanonicalCurve};
use crate::error::{Error, Result};
use crate::geometry::{discriminant_sextic, quartics_with_nodes, split_forms, transform_quartic, QuarticModel};
use crate::linalg::{rank_by_column_greedy, Matrix};
use crate::poly::{DualPoly, MultiPoly, Poly};
use crate::report::Status;
use crate::scalar::{Dual, Fp, Prime, Scalar};

/// Columns of the matrix: three quadrics in five variables.
pub const N_COLUMNS: usize = 45;

/// Fewest family rows for which a full-rank matrix proves surjectivity.
pub const MIN_FAMILY_ROWS: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentVector {
    pub fdot: Poly,
    pub pdot: [Fp; 3],
}

impl TangentVector {
    pub fn zero(prime: Prime) -> Self {
        TangentVector { fdot: Poly::zero(&crate::geometry::space_vars(), prime), pdot: [Fp::zero(prime); 3] }
    }

    pub fn scale(&self, c: Fp) -> Self {
        TangentVector { fdot: self.fdot.scale(c), pdot: self.pdot.map(|x| x * c) }
    }

    pub fn add(&self, other: &Self) -> Self {
        TangentVector {
            fdot: &self.fdot + &other.fdot,
            pdot: core::array::from_fn(|i| self.pdot[i] + other.pdot[i]),
        }
    }
}

#[derive(Clone, Debug)]
pub struct TangentBasis {
    pub vectors: Vec<TangentVector>,
    /// Rank of the linearized node conditions at `P0`.
    pub condition_rank: usize,
    /// The quartic directions of the chart: a complement of `F` in the
    /// space of quartics nodal at `P1..P5`.
    pub chart: Vec<Poly>,
}

/// Extends `{f}` greedily from `basis` and returns the added elements.
pub fn chart_complement(f: &Poly, basis: &[Poly]) -> Result<Vec<Poly>> {
    let p = f.prime();
    let mut span = Matrix::<Fp>::zeros(p, 0, 35);
    span.push_row(&f.coeff_vector(4)?);
    let mut rank = 1;
    let mut out = Vec::new();
    for b in basis {
        span.push_row(&b.coeff_vector(4)?);
        let r = span.rank()?;
        if r > rank {
            rank = r;
            out.push(b.clone());
        }
    }
    if out.len() + 1 != basis.len() || span.rank()? != basis.len() {
        return Err(Error::InvalidInput("the quartic is not in the span of the given basis".into()));
    }
    Ok(out)
}

/// The `4 × (n + 3)` Jacobian of `∂F/∂x_k(P0) = 0` with respect to the chart
/// coordinates: one column per chart quartic, then the three coordinates of
/// `P0` in `x3 = 1`.
pub fn node_condition_matrix(f: &Poly, chart: &[Poly]) -> Result<Matrix<Fp>> {
    let p = f.prime();
    let e3 = [Fp::zero(p), Fp::zero(p), Fp::zero(p), Fp::one(p)];
    let grad = f.gradient();
    let mut m = Matrix::zeros(p, 4, chart.len() + 3);
    for k in 0..4 {
        for (c, g) in chart.iter().enumerate() {
            m[(k, c)] = g.partial_derivative(k).evaluate(&e3)?;
        }
        for j in 0..3 {
            m[(k, chart.len() + j)] = grad[k].partial_derivative(j).evaluate(&e3)?;
        }
    }
    Ok(m)
}

/// Tangent space at `(F, P0)` to the locus of quartics nodal at `P0..P5`,
/// in the chart fixing the coefficient of `F` and `x3 = 1` at `P0`.
pub fn tangent_space_b0(model: &QuarticModel, quartic_basis: &[Poly]) -> Result<TangentBasis> {
    let chart = chart_complement(model.quartic(), quartic_basis)?;
    let m = node_condition_matrix(model.quartic(), &chart)?;
    let condition_rank = m.rank()?;
    let ker = m.kernel()?;
    let expected = chart.len() + 3 - 4;
    if ker.nrows() != expected {
        return Err(Error::UnexpectedTangentDim { expected, found: ker.nrows() });
    }
    let p = model.prime();
    let vectors = (0..ker.nrows())
        .map(|i| {
            let row = ker.row(i);
            let mut fdot = Poly::zero(model.quartic().vars(), p);
            for (g, &c) in chart.iter().zip(row) {
                fdot = &fdot + &g.scale(c);
            }
            let n = chart.len();
            TangentVector { fdot, pdot: [row[n], row[n + 1], row[n + 2]] }
        })
        .collect();
    Ok(TangentBasis { vectors, condition_rank, chart })
}

/// The unperturbed canonical curve of a model.
pub fn base_curve(model: &QuarticModel) -> Result<CanonicalCurve<Fp>> {
    let cubics = cubic_system_at(model.sextic_nodes())?;
    canonical_quadrics(model.sextic(), &cubics)
}

/// Everything computed for one tangent vector.
#[derive(Clone, Debug)]
pub struct FirstOrder {
    /// The quartic after moving the perturbed `P0` back to `(0:0:0:1)`.
    pub quartic: DualPoly,
    pub sextic: DualPoly,
    /// Perturbed sextic nodes, in the same charts as the unperturbed ones.
    pub nodes: Vec<Vec<Dual>>,
    pub curve: CanonicalCurve<Dual>,
}

impl FirstOrder {
    /// `(H_1j, H_2j, H_3j)`.
    pub fn tangent_quadrics(&self) -> Vec<Poly> {
        self.curve.quadrics.iter().map(DualPoly::eps_part).collect()
    }
}

fn check_reduction(ok: bool, stage: &'static str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::ReductionMismatch(stage))
    }
}

/// First-order node of `f + ε·ḟ` near the ordinary node `q` of `f`: the
/// Newton step `Hess(f)(q)·δ = −∇ḟ(q)` in the affine chart of `q`.
pub fn track_node(f: &Poly, fdot: &Poly, q: &[Fp], chart: usize) -> Result<Vec<Dual>> {
    let p = f.prime();
    let idx: Vec<usize> = (0..q.len()).filter(|&i| i != chart).collect();
    let n = idx.len();
    let mut hess = Matrix::<Fp>::zeros(p, n, n);
    let mut rhs = vec![Fp::zero(p); n];
    for (a, &i) in idx.iter().enumerate() {
        let fi = f.partial_derivative(i);
        for (b, &j) in idx.iter().enumerate() {
            hess[(a, b)] = fi.partial_derivative(j).evaluate(q)?;
        }
        rhs[a] = -fdot.partial_derivative(i).evaluate(q)?;
    }
    let inv = hess.inverse().map_err(|_| Error::NotOrdinaryNode)?;
    let mut out: Vec<Dual> = q.iter().map(|&c| Dual::from_fp(c)).collect();
    for (a, &i) in idx.iter().enumerate() {
        let delta = (0..n).fold(Fp::zero(p), |s, b| s + inv[(a, b)] * rhs[b]);
        out[i] = Dual::new(q[i], delta);
    }
    Ok(out)
}

/// Pushes one tangent vector through the construction over the dual
/// numbers. The ε = 0 reduction of every stage is compared with `base`.
pub fn first_order_pipeline(model: &QuarticModel, base: &CanonicalCurve<Fp>, v: &TangentVector) -> Result<FirstOrder> {
    let p = model.prime();
    let f_eps = DualPoly::from_parts(model.quartic(), &v.fdot)?;
    // x = (I + εΔ0)·x' with Δ0·e3 = Ṗ moves the perturbed P0 to e3
    let mut a = Matrix::<Dual>::identity(p, 4);
    for i in 0..3 {
        a[(i, 3)] = Dual::new(Fp::zero(p), v.pdot[i]);
    }
    let quartic = transform_quartic(&f_eps, &a)?;
    let split = split_forms(&quartic)?;
    check_reduction(
        split.u2.constant_part() == *model.u2()
            && split.u3.constant_part() == *model.u3()
            && split.u4.constant_part() == *model.u4(),
        "split",
    )?;
    let sextic = discriminant_sextic(&split.u2, &split.u3, &split.u4)?;
    check_reduction(sextic.constant_part() == *model.sextic(), "sextic")?;
    let fdot = sextic.eps_part();
    let nodes = model
        .sextic_nodes()
        .iter()
        .map(|q| track_node(model.sextic(), &fdot, q.coords(), q.chart()))
        .collect::<Result<Vec<_>>>()?;
    let cubics = cubic_system(&nodes)?;
    check_reduction(cubics.iter().map(DualPoly::constant_part).eq(base.cubics.iter().cloned()), "cubic system")?;
    let curve = canonical_quadrics(&sextic, &cubics)?;
    check_reduction(curve.quadrics.iter().map(DualPoly::constant_part).eq(base.quadrics.iter().cloned()), "quadrics")?;
    Ok(FirstOrder { quartic, sextic, nodes, curve })
}

/// An element of a basis of `sl(5)` with a label for provenance.
#[derive(Clone, Debug)]
pub struct Sl5Element {
    pub label: String,
    pub matrix: Matrix<Fp>,
}

/// The elementary matrices `E_ij` (`i ≠ j`) followed by `E_00 − E_ii` for
/// `i = 1..4`: 24 traceless matrices.
pub fn sl5_basis(prime: Prime) -> Vec<Sl5Element> {
    let mut out = Vec::with_capacity(24);
    for i in 0..5 {
        for j in 0..5 {
            if i != j {
                let mut m = Matrix::zeros(prime, 5, 5);
                m[(i, j)] = Fp::one(prime);
                out.push(Sl5Element { label: format!("E{i}{j}"), matrix: m });
            }
        }
    }
    for i in 1..5 {
        let mut m = Matrix::zeros(prime, 5, 5);
        m[(0, 0)] = Fp::one(prime);
        m[(i, i)] = -Fp::one(prime);
        out.push(Sl5Element { label: format!("E00-E{i}{i}"), matrix: m });
    }
    out
}

/// Which part of the construction a row comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowTag {
    /// The `j`-th tangent vector of the family.
    Family(usize),
    /// `H_quadric` placed in block `slot`.
    Gl3 { quadric: usize, slot: usize },
    /// `ᵗΔ·Q_i + Q_i·Δ` for the labelled `Δ`.
    Sl5(String),
}

impl fmt::Display for RowTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowTag::Family(j) => write!(f, "family[{j}]"),
            RowTag::Gl3 { quadric, slot } => write!(f, "gl3[H{} in slot {}]", quadric + 1, slot + 1),
            RowTag::Sl5(label) => write!(f, "sl5[{label}]"),
        }
    }
}

/// Concatenated coefficient vectors of three quadrics.
pub fn triple_row(quadrics: &[Poly]) -> Result<Vec<Fp>> {
    if quadrics.len() != 3 {
        return Err(Error::InvalidInput(format!("expected 3 quadrics, got {}", quadrics.len())));
    }
    let mut row = Vec::with_capacity(N_COLUMNS);
    for q in quadrics {
        row.extend(q.coeff_vector(2)?);
    }
    Ok(row)
}

/// The 9 rows `(H_a in block b)` followed by one row per element of `sl5`.
pub fn trivial_rows(quadrics: &[Poly], sl5: &[Sl5Element]) -> Result<Vec<(RowTag, Vec<Fp>)>> {
    let first = quadrics.first().ok_or_else(|| Error::InvalidInput("no quadrics".into()))?;
    let (y, p) = (first.vars().clone(), first.prime());
    let zero = Poly::zero(&y, p);
    let mut rows = Vec::with_capacity(9 + sl5.len());
    for slot in 0..3 {
        for (a, h) in quadrics.iter().enumerate() {
            let mut triple = vec![zero.clone(), zero.clone(), zero.clone()];
            triple[slot] = h.clone();
            rows.push((RowTag::Gl3 { quadric: a, slot }, triple_row(&triple)?));
        }
    }
    let forms = quadrics.iter().map(Poly::quadratic_form_matrix).collect::<Result<Vec<_>>>()?;
    for d in sl5 {
        let dt = d.matrix.transpose();
        let triple: Vec<Poly> = forms.iter().map(|q| MultiPoly::from_quadratic_form(&y, &dt.mul(q).add(&q.mul(&d.matrix)))).collect();
        rows.push((RowTag::Sl5(d.label.clone()), triple_row(&triple)?));
    }
    Ok(rows)
}

/// The matrix with its row provenance.
#[derive(Clone, Debug)]
pub struct KSMatrix {
    pub rows: Matrix<Fp>,
    pub provenance: Vec<RowTag>,
}

/// Family rows first (one per triple `(H_1j, H_2j, H_3j)`), then the
/// trivial rows.
pub fn assemble_matrix(quadrics: &[Poly], family: &[Vec<Poly>], sl5: &[Sl5Element]) -> Result<KSMatrix> {
    let p = quadrics.first().ok_or_else(|| Error::InvalidInput("no quadrics".into()))?.prime();
    let mut rows = Matrix::zeros(p, 0, N_COLUMNS);
    let mut provenance = Vec::new();
    for (j, triple) in family.iter().enumerate() {
        rows.push_row(&triple_row(triple)?);
        provenance.push(RowTag::Family(j));
    }
    for (tag, row) in trivial_rows(quadrics, sl5)? {
        rows.push_row(&row);
        provenance.push(tag);
    }
    Ok(KSMatrix { rows, provenance })
}

#[derive(Clone, Debug)]
pub struct KSCertificate {
    pub matrix: KSMatrix,
    /// Rank by Gaussian elimination.
    pub rank: usize,
    /// Rank by the independent column-greedy count.
    pub rank_check: usize,
    pub n_family: usize,
    pub verdict: Status,
}

impl KSCertificate {
    pub fn from_matrix(matrix: KSMatrix) -> Result<KSCertificate> {
        let rank = matrix.rows.rank()?;
        let rank_check = rank_by_column_greedy(&matrix.rows);
        let n_family = matrix.provenance.iter().filter(|t| matches!(t, RowTag::Family(_))).count();
        let ok = rank == N_COLUMNS && rank_check == rank && n_family >= MIN_FAMILY_ROWS;
        Ok(KSCertificate { matrix, rank, rank_check, n_family, verdict: Status::from_bool(ok) })
    }

    pub fn max_rank(&self) -> usize {
        N_COLUMNS
    }
}

/// Full run for one model.
#[derive(Clone, Debug)]
pub struct KsRun {
    pub base: CanonicalCurve<Fp>,
    /// Dimension of the quartics nodal at `P1..P5`.
    pub quartic_space_dim: usize,
    pub tangent: TangentBasis,
    pub family: Vec<Vec<Poly>>,
    pub certificate: KSCertificate,
}

/// The `ε`-parts of the quadrics for each tangent vector.
pub fn family_rows(model: &QuarticModel, base: &CanonicalCurve<Fp>, vectors: &[TangentVector]) -> Result<Vec<Vec<Poly>>> {
    vectors.iter().map(|v| first_order_pipeline(model, base, v).map(|r| r.tangent_quadrics())).collect()
}

/// Builds and ranks the matrix for a certified model.
pub fn assemble_and_rank(model: &QuarticModel) -> Result<KsRun> {
    let base = base_curve(model)?;
    let quartic_basis = quartics_with_nodes(&model.nodes()[1..])?;
    let tangent = tangent_space_b0(model, &quartic_basis)?;
    let family = family_rows(model, &base, &tangent.vectors)?;
    let matrix = assemble_matrix(&base.quadrics, &family, &sl5_basis(model.prime()))?;
    let certificate = KSCertificate::from_matrix(matrix)?;
    Ok(KsRun { base, quartic_space_dim: quartic_basis.len(), tangent, family, certificate })
}
