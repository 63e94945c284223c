//! Irreducible complex Clifford algebra representations and the spinor
//! module of a direct sum `E ⊕ F`.
//!
//! Conventions: generators satisfy `g_i g_j + g_j g_i = -2 delta_ij`, are
//! unitary and skew-adjoint. The complex volume element is
//! `i^ceil(n/2) * g_1 ... g_n`; for odd `n` it is the scalar `(-1)^j` on the
//! module with index `j`, for even `n` it grades the module into half-spinor
//! subspaces.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linalg::CMat;
use crate::scalar::{ci, cr, real, C, Real};


/// Largest vector-space dimension accepted by the constructors
/// (matrices up to 2^(16/2) = 256).
pub const DEFAULT_DIM_CAP: usize = 16;

/// A concrete irreducible representation of the complex Clifford algebra
/// of an `n`-dimensional Euclidean space.
#[derive(Clone, Debug)]
pub struct CliffordRep<T: Real> {
    n: usize,
    generators: Vec<CMat<T>>,
    module_index: u8,
    volume: CMat<T>,
}

impl<T: Real> CliffordRep<T> {
    /// Vector-space dimension `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Spinor dimension `2^floor(n/2)`.
    pub fn spinor_dim(&self) -> usize {
        self.generators[0].rows()
    }

    pub fn generators(&self) -> &[CMat<T>] {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> &CMat<T> {
        &self.generators[i]
    }

    /// Module label; meaningful only for odd `n`.
    pub fn module_index(&self) -> u8 {
        self.module_index
    }

    /// Cached complex volume element.
    pub fn volume_element(&self) -> &CMat<T> {
        &self.volume
    }

    /// Clifford multiplication by the real vector `v`.
    pub fn gamma(&self, v: &[T]) -> CMat<T> {
        assert_eq!(v.len(), self.n, "vector length must equal n");
        let d = self.spinor_dim();
        let mut out = CMat::zeros(d, d);
        for (vi, g) in v.iter().zip(&self.generators) {
            out = out.add(&g.scale(cr(*vi)));
        }
        out
    }

    /// Clifford multiplication by a complex-coefficient vector (used for
    /// mean-curvature vectors that have been frame-decomposed).
    pub fn gamma_complex(&self, v: &[C<T>]) -> CMat<T> {
        assert_eq!(v.len(), self.n);
        let d = self.spinor_dim();
        let mut out = CMat::zeros(d, d);
        for (vi, g) in v.iter().zip(&self.generators) {
            out = out.add(&g.scale(*vi));
        }
        out
    }

    /// Product of generators for an index subset, in increasing index order.
    pub fn generator_product(&self, indices: &[usize]) -> CMat<T> {
        let d = self.spinor_dim();
        let mut out = CMat::identity(d);
        for &i in indices {
            out = out.mul(&self.generators[i]);
        }
        out
    }
}

/// Computes `i^ceil(n/2) g_1 ... g_n` from the given generators.
fn volume_from_generators<T: Real>(n: usize, gens: &[CMat<T>]) -> CMat<T> {
    let d = gens[0].rows();
    let mut prod = CMat::identity(d);
    for g in gens {
        prod = prod.mul(g);
    }
    let power = (n + 1) / 2; // ceil(n/2)
    let phase = match power % 4 {
        0 => cr(T::one()),
        1 => ci(T::one()),
        2 => cr(-T::one()),
        _ => ci(-T::one()),
    };
    prod.scale(phase)
}

/// The 2x2 Pauli matrices as complex matrices.
fn pauli<T: Real>() -> [CMat<T>; 3] {
    let zero = Complex::new(T::zero(), T::zero());
    let one = cr(T::one());
    let i = ci(T::one());
    let s1 = CMat::from_rows(2, 2, vec![zero, one, one, zero]);
    let s2 = CMat::from_rows(2, 2, vec![zero, -i, i, zero]);
    let s3 = CMat::from_rows(2, 2, vec![one, zero, zero, -one]);
    [s1, s2, s3]
}

/// Builds the irreducible representation in dimension `n`; for odd `n` the
/// module with index `j` (the volume element acts there as `(-1)^j`).
pub fn irreducible_rep<T: Real>(n: usize, j: u8) -> Result<CliffordRep<T>> {
    irreducible_rep_with_cap(n, j, DEFAULT_DIM_CAP)
}

/// As [`irreducible_rep`] with an explicit dimension cap.
pub fn irreducible_rep_with_cap<T: Real>(n: usize, j: u8, cap: usize) -> Result<CliffordRep<T>> {
    if n == 0 {
        return Err(Error::InvalidArgument("dimension n must be >= 1".into()));
    }
    if n > cap {
        return Err(Error::Capacity(format!("n = {n} exceeds dimension cap {cap}")));
    }
    let k = n / 2;
    let [s1, s2, s3] = pauli::<T>();
    let i_unit = ci(T::one());

    // Iterated tensor construction from the 2x2 base case:
    //   g_{2j-1} = i s3^(j-1) (x) s1 (x) I, g_{2j} = i s3^(j-1) (x) s2 (x) I.
    let mut gens: Vec<CMat<T>> = Vec::with_capacity(n);
    let d = 1usize << k;
    for jj in 0..k {
        let mut left = CMat::identity(1);
        for _ in 0..jj {
            left = left.kron(&s3);
        }
        let tail = CMat::identity(1 << (k - jj - 1));
        let g_odd = left.kron(&s1).kron(&tail).scale(i_unit);
        let g_even = left.kron(&s2).kron(&tail).scale(i_unit);
        gens.push(g_odd);
        gens.push(g_even);
    }
    if n % 2 == 1 {
        let mut last = CMat::identity(1);
        for _ in 0..k {
            last = last.kron(&s3);
        }
        gens.push(last.scale(i_unit));
    }
    debug_assert_eq!(gens.len(), n);
    debug_assert_eq!(gens[0].rows(), d);

    let mut volume = volume_from_generators(n, &gens);
    let module_index = if n % 2 == 1 {
        // The volume element is exactly (+-1) I; flip generators to realise
        // the requested (-1)^j convention.
        let sign = volume[(0, 0)].re;
        let want = if j == 0 { T::one() } else { -T::one() };
        if (sign - want).abs() > real(0.5) {
            for g in gens.iter_mut() {
                *g = g.neg();
            }
            volume = volume_from_generators(n, &gens);
        }
        j
    } else {
        0
    };

    Ok(CliffordRep { n, generators: gens, module_index, volume })
}

/// Passes to the opposite module of an odd-dimensional representation:
/// all generators are negated, the module label and the volume sign flip.
pub fn swap_module<T: Real>(rep: &CliffordRep<T>) -> Result<CliffordRep<T>> {
    if rep.n % 2 == 0 {
        return Err(Error::InvalidArgument(
            "swap_module requires odd n (even-dimensional modules are unique)".into(),
        ));
    }
    let gens: Vec<CMat<T>> = rep.generators.iter().map(|g| g.neg()).collect();
    let volume = volume_from_generators(rep.n, &gens);
    Ok(CliffordRep {
        n: rep.n,
        generators: gens,
        module_index: 1 - rep.module_index,
        volume,
    })
}

/// Which construction was used for the spinor module of `E ⊕ F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumCase {
    /// dim E and dim F both even.
    EvenEven,
    /// dim E even, dim F odd.
    EvenOdd,
    /// dim E odd, dim F even.
    OddEven,
    /// dim E and dim F both odd.
    OddOdd,
}

/// The module content of a sum decomposition: a single graded module when
/// `n + m` is even, a pair of modules when `n + m` is odd.
#[derive(Clone, Debug)]
pub enum SumModules<T: Real> {
    Graded {
        rep: CliffordRep<T>,
        proj_plus: CMat<T>,
        proj_minus: CMat<T>,
    },
    Pair {
        module0: CliffordRep<T>,
        module1: CliffordRep<T>,
    },
}

/// Spinor module of `E ⊕ F` assembled from representations of the factors.
#[derive(Clone, Debug)]
pub struct SumDecomposition<T: Real> {
    pub case_tag: SumCase,
    pub dim_e: usize,
    pub dim_f: usize,
    pub modules: SumModules<T>,
    /// The swap isomorphism between the two modules of the odd factor,
    /// present in the odd-odd case. With the sign convention of
    /// [`swap_module`] it is the identity matrix.
    pub swap_iso: Option<CMat<T>>,
}

impl<T: Real> SumDecomposition<T> {
    /// The single graded representation (even total dimension).
    pub fn graded_rep(&self) -> Option<&CliffordRep<T>> {
        match &self.modules {
            SumModules::Graded { rep, .. } => Some(rep),
            SumModules::Pair { .. } => None,
        }
    }

    /// The module with the given label (odd total dimension).
    pub fn module(&self, j: u8) -> Option<&CliffordRep<T>> {
        match &self.modules {
            SumModules::Pair { module0, module1 } => Some(if j == 0 { module0 } else { module1 }),
            SumModules::Graded { .. } => None,
        }
    }
}

/// Builds the spinor module of `E ⊕ F`, selecting the construction by the
/// parities of the factor dimensions.
pub fn direct_sum_rep<T: Real>(rep_e: &CliffordRep<T>, rep_f: &CliffordRep<T>) -> Result<SumDecomposition<T>> {
    direct_sum_rep_with_cap(rep_e, rep_f, DEFAULT_DIM_CAP)
}

/// As [`direct_sum_rep`] with an explicit dimension cap.
pub fn direct_sum_rep_with_cap<T: Real>(
    rep_e: &CliffordRep<T>,
    rep_f: &CliffordRep<T>,
    cap: usize,
) -> Result<SumDecomposition<T>> {
    let n = rep_e.n;
    let m = rep_f.n;
    if n + m > cap {
        return Err(Error::Capacity(format!("n + m = {} exceeds dimension cap {cap}", n + m)));
    }
    let de = rep_e.spinor_dim();
    let df = rep_f.spinor_dim();
    let total = n + m;

    let case = match (n % 2, m % 2) {
        (0, 0) => SumCase::EvenEven,
        (0, 1) => SumCase::EvenOdd,
        (1, 0) => SumCase::OddEven,
        _ => SumCase::OddOdd,
    };

    match case {
        SumCase::EvenEven => {
            let gens = tensor_sum_generators(rep_e, rep_f);
            let volume = volume_from_generators(total, &gens);
            let rep = CliffordRep { n: total, generators: gens, module_index: 0, volume };
            let (pp, pm) = grading_projectors(&rep);
            Ok(SumDecomposition {
                case_tag: case,
                dim_e: n,
                dim_f: m,
                modules: SumModules::Graded { rep, proj_plus: pp, proj_minus: pm },
                swap_iso: None,
            })
        }
        SumCase::EvenOdd => {
            // Same formulas as the even-even case, applied to each module
            // of the odd factor; the resulting module inherits the label.
            let f0 = if rep_f.module_index == 0 { rep_f.clone() } else { swap_module(rep_f)? };
            let f1 = swap_module(&f0)?;
            let build = |f: &CliffordRep<T>, label: u8| -> CliffordRep<T> {
                let gens = tensor_sum_generators(rep_e, f);
                let volume = volume_from_generators(total, &gens);
                CliffordRep { n: total, generators: gens, module_index: label, volume }
            };
            Ok(SumDecomposition {
                case_tag: case,
                dim_e: n,
                dim_f: m,
                modules: SumModules::Pair { module0: build(&f0, 0), module1: build(&f1, 1) },
                swap_iso: None,
            })
        }
        SumCase::OddEven => {
            // g_j(X) = g_{E,j}(X) (x) volF, g_j(Y) = I (x) g_F(Y): the sign
            // rule (-1)^{deg tau} acts on the E factor through the volume
            // element of F.
            let e0 = if rep_e.module_index == 0 { rep_e.clone() } else { swap_module(rep_e)? };
            let e1 = swap_module(&e0)?;
            let build = |e: &CliffordRep<T>, label: u8| -> CliffordRep<T> {
                let mut gens: Vec<CMat<T>> = Vec::with_capacity(total);
                for g in &e.generators {
                    gens.push(g.kron(rep_f.volume_element()));
                }
                let ide = CMat::identity(de);
                for g in &rep_f.generators {
                    gens.push(ide.kron(g));
                }
                let volume = volume_from_generators(total, &gens);
                CliffordRep { n: total, generators: gens, module_index: label, volume }
            };
            Ok(SumDecomposition {
                case_tag: case,
                dim_e: n,
                dim_f: m,
                modules: SumModules::Pair { module0: build(&e0, 0), module1: build(&e1, 1) },
                swap_iso: None,
            })
        }
        SumCase::OddOdd => {
            let e0 = if rep_e.module_index == 0 { rep_e.clone() } else { swap_module(rep_e)? };
            let f0 = if rep_f.module_index == 0 { rep_f.clone() } else { swap_module(rep_f)? };
            // Both half-spinor summands are realised on Sigma^0 E (x) Sigma^0 F;
            // the swap isomorphism Phi between Sigma^0 F and Sigma^1 F is the
            // identity with the gamma_{F,1} = -gamma_{F,0} convention.
            let dd = de * df;
            let phi = CMat::identity(df);
            let i_unit = ci(T::one());
            let mut gens: Vec<CMat<T>> = Vec::with_capacity(total);
            let idf = CMat::identity(df);
            let ide = CMat::identity(de);
            for g in &e0.generators {
                // i [[0, A], [-A, 0]] with A = g (x) I.
                let a = g.kron(&idf);
                let mut blk = CMat::zeros(2 * dd, 2 * dd);
                blk.set_block(0, dd, &a);
                blk.set_block(dd, 0, &a.neg());
                gens.push(blk.scale(i_unit));
            }
            for g in &f0.generators {
                // Off-diagonal embedding of the odd normal factor through the
                // swap isomorphism; the overall sign is fixed so that the
                // complex volume element acts as +1 on the first block.
                let b = ide.kron(g);
                let mut blk = CMat::zeros(2 * dd, 2 * dd);
                blk.set_block(0, dd, &b);
                blk.set_block(dd, 0, &b);
                gens.push(blk);
            }
            let volume = volume_from_generators(total, &gens);
            let rep = CliffordRep { n: total, generators: gens, module_index: 0, volume };
            let (pp, pm) = grading_projectors(&rep);
            Ok(SumDecomposition {
                case_tag: case,
                dim_e: n,
                dim_f: m,
                modules: SumModules::Graded { rep, proj_plus: pp, proj_minus: pm },
                swap_iso: Some(phi),
            })
        }
    }
}

/// Case-1 generator list: `g(X) = g_E(X) (x) I`, `g(Y) = volE (x) g_F(Y)`.
fn tensor_sum_generators<T: Real>(rep_e: &CliffordRep<T>, rep_f: &CliffordRep<T>) -> Vec<CMat<T>> {
    let df = rep_f.spinor_dim();
    let idf = CMat::identity(df);
    let mut gens: Vec<CMat<T>> = Vec::with_capacity(rep_e.n + rep_f.n);
    for g in &rep_e.generators {
        gens.push(g.kron(&idf));
    }
    for g in &rep_f.generators {
        gens.push(rep_e.volume_element().kron(g));
    }
    gens
}

/// Half-spinor projectors `(I ± volume)/2` of an even-dimensional rep.
pub fn grading_projectors<T: Real>(rep: &CliffordRep<T>) -> (CMat<T>, CMat<T>) {
    let d = rep.spinor_dim();
    let id = CMat::identity(d);
    let half = cr(real::<T>(0.5));
    let pp = id.add(rep.volume_element()).scale(half);
    let pm = id.sub(rep.volume_element()).scale(half);
    (pp, pm)
}

/// Residual report of [`verify_clifford`].
#[derive(Clone, Copy, Debug)]
pub struct CliffordResiduals<T: Real> {
    /// max over i, j of `|g_i g_j + g_j g_i + 2 delta_ij I|`.
    pub relation: T,
    /// max over i of unitarity and skew-adjointness defects.
    pub unitarity: T,
    /// volume element defects (square, trace / sign convention).
    pub grading: T,
    pub pass: bool,
}

/// Checks the algebraic relations of a representation and reports maxima.
pub fn verify_clifford<T: Real>(rep: &CliffordRep<T>, tol: T) -> CliffordResiduals<T> {
    let d = rep.spinor_dim();
    let id = CMat::identity(d);
    let two = cr(real::<T>(2.0));

    let mut relation = T::zero();
    for i in 0..rep.n {
        for j in i..rep.n {
            let gi = &rep.generators[i];
            let gj = &rep.generators[j];
            let mut anti = gi.mul(gj).add(&gj.mul(gi));
            if i == j {
                anti = anti.add(&id.scale(two));
            }
            relation = relation.max(anti.max_abs());
        }
    }

    let mut unitarity = T::zero();
    for g in &rep.generators {
        let gu = g.adjoint().mul(g).sub(&id).max_abs();
        let gs = g.adjoint().add(g).max_abs();
        unitarity = unitarity.max(gu).max(gs);
    }

    let om = rep.volume_element();
    let mut grading = om.mul(om).sub(&id).max_abs();
    if rep.n % 2 == 1 {
        let want = if rep.module_index == 0 { T::one() } else { -T::one() };
        let dev = om.sub(&id.scale(cr(want))).max_abs();
        grading = grading.max(dev);
    } else {
        grading = grading.max(om.trace().norm());
    }

    let pass = relation <= tol && unitarity <= tol && grading <= tol;
    CliffordResiduals { relation, unitarity, grading, pass }
}
