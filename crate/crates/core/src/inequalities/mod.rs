//! One checker per monogamy relation. Every checker returns an
//! [`InequalityReport`] carrying both sides, the slack `rhs - lhs` and a
//! verdict under the configured tolerance.
//!
//! Qubit 0 plays the role of party A throughout; use [`with_party_a`] to
//! move another qubit into that slot.

mod bipartition;
mod report;

pub use bipartition::{bipartition_tangles, BipartitionTangles};
pub use report::{InequalityReport, Relation, Verdict, DEFAULT_TOLERANCE};

use crate::error::{Error, Result};
use crate::measures::{linear_entropy, tangles, MeasureSet};
use crate::qlinalg::{DensityMatrix, PureState, Reduce};

/// Everything the pure-state checkers need, computed once per state.
#[derive(Debug, Clone)]
pub struct StateProfile {
    pub n_qubits: usize,
    /// `S_L(ρ^A)`
    pub s_lin_a: f64,
    /// Measures of `ρ^{A B_k}` for `k = 1..N`, in order.
    pub pairs: Vec<MeasureSet>,
    pub fingerprint: String,
}

impl StateProfile {
    pub fn new(psi: &PureState) -> Result<Self> {
        let n = psi.n_qubits();
        if n < 2 {
            return Err(Error::QubitCount {
                got: n,
                reason: "a pure-state profile needs at least 2 qubits",
            });
        }
        let s_lin_a = linear_entropy(&psi.reduce(&[0])?);
        let pairs = (1..n)
            .map(|k| tangles(&psi.reduce(&[0, k])?))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            n_qubits: n,
            s_lin_a,
            pairs,
            fingerprint: psi.fingerprint(),
        })
    }

    /// `Σ_k τ(ρ^{AB_k})`
    pub fn sum_tangle(&self) -> f64 {
        self.pairs.iter().map(|m| m.tangle).sum()
    }

    /// `Σ_k τ_a(ρ^{AB_k})`
    pub fn sum_tangle_a(&self) -> f64 {
        self.pairs.iter().map(|m| m.tangle_a).sum()
    }

    /// `Σ_k S_L(A:B_k)`
    pub fn sum_mutual(&self) -> f64 {
        self.pairs.iter().map(|m| m.s_mutual).sum()
    }
}

/// Returns `psi` with qubits 0 and `q` exchanged.
pub fn with_party_a(psi: &PureState, q: usize) -> Result<PureState> {
    if q == 0 {
        return Ok(psi.clone());
    }
    psi.swap_qubits(0, q)
}

fn require_qubits(n: usize, ok: bool, reason: &'static str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::QubitCount { got: n, reason })
    }
}

fn require_two_qubit(rho: &DensityMatrix) -> Result<()> {
    if rho.n_qubits() != 2 {
        return Err(Error::Dimension(format!(
            "expected a two-qubit density matrix, got {} qubits",
            rho.n_qubits()
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Checker {
    pub tolerance: f64,
}

impl Default for Checker {
    fn default() -> Self {
        Self {
            tolerance: DEFAULT_TOLERANCE,
        }
    }
}

impl Checker {
    pub fn new(tolerance: f64) -> Result<Self> {
        if !(tolerance > 0.0 && tolerance.is_finite()) {
            return Err(Error::Config(format!(
                "tolerance must be positive, got {tolerance}"
            )));
        }
        Ok(Self { tolerance })
    }

    fn at_most(&self, name: &str, lhs: f64, rhs: f64, fp: &str) -> InequalityReport {
        InequalityReport::at_most(name, lhs, rhs, self.tolerance, fp)
    }

    /// `Σ_k τ(ρ^{AB_k}) ≤ S_L(ρ^A)`
    pub fn ckw(&self, psi: &PureState) -> Result<InequalityReport> {
        self.ckw_from(&StateProfile::new(psi)?)
    }

    pub fn ckw_from(&self, p: &StateProfile) -> Result<InequalityReport> {
        require_qubits(
            p.n_qubits,
            p.n_qubits >= 3,
            "monogamy needs at least 3 qubits",
        )?;
        Ok(self.at_most("ckw", p.sum_tangle(), p.s_lin_a, &p.fingerprint))
    }

    /// `S_L(ρ^A) ≤ Σ_k τ_a(ρ^{AB_k})`
    pub fn dual_monogamy(&self, psi: &PureState) -> Result<InequalityReport> {
        self.dual_monogamy_from(&StateProfile::new(psi)?)
    }

    pub fn dual_monogamy_from(&self, p: &StateProfile) -> Result<InequalityReport> {
        require_qubits(
            p.n_qubits,
            p.n_qubits >= 3,
            "monogamy needs at least 3 qubits",
        )?;
        Ok(self.at_most("dual_monogamy", p.s_lin_a, p.sum_tangle_a(), &p.fingerprint))
    }

    /// Both halves of `Σ τ ≤ S_L(ρ^A) ≤ Σ τ_a`, sharing the middle term.
    pub fn chain(&self, psi: &PureState) -> Result<(InequalityReport, InequalityReport)> {
        let p = StateProfile::new(psi)?;
        Ok((self.ckw_from(&p)?, self.dual_monogamy_from(&p)?))
    }

    /// `½ S_L(A:B) ≤ τ_a(ρ^{AB})`
    pub fn lemma1(&self, rho: &DensityMatrix) -> Result<InequalityReport> {
        require_two_qubit(rho)?;
        let m = tangles(rho)?;
        Ok(self.lemma1_from(&m, &rho.fingerprint()))
    }

    fn lemma1_from(&self, m: &MeasureSet, fp: &str) -> InequalityReport {
        self.at_most("lemma1", 0.5 * m.s_mutual, m.tangle_a, fp)
    }

    /// `S_L(A:B) ≤ τ_a(ρ^{AB}) + τ(ρ^{AB})`
    pub fn claim6(&self, rho: &DensityMatrix) -> Result<InequalityReport> {
        require_two_qubit(rho)?;
        let m = tangles(rho)?;
        Ok(self.claim6_from(&m, &rho.fingerprint()))
    }

    fn claim6_from(&self, m: &MeasureSet, fp: &str) -> InequalityReport {
        self.at_most("claim6", m.s_mutual, m.tangle_a + m.tangle, fp)
    }

    /// `τ_a(ρ^{AB}) ≤ min{S_L(ρ^A), S_L(ρ^B)}`
    pub fn assistance_ceiling(&self, rho: &DensityMatrix) -> Result<InequalityReport> {
        require_two_qubit(rho)?;
        let m = tangles(rho)?;
        Ok(self.assistance_ceiling_from(&m, &rho.fingerprint()))
    }

    fn assistance_ceiling_from(&self, m: &MeasureSet, fp: &str) -> InequalityReport {
        self.at_most(
            "assistance_ceiling",
            m.tangle_a,
            m.s_lin_a.min(m.s_lin_b),
            fp,
        )
    }

    /// `2 S_L(ρ^A) ≤ Σ_k S_L(A:B_k) ≤ N S_L(ρ^A)`, plus the sharper
    /// `Σ_k S_L(A:B_k) ≤ (N-1) S_L(ρ^A)` for three and four qubits.
    pub fn theorem2(&self, psi: &PureState) -> Result<Vec<InequalityReport>> {
        self.theorem2_from(&StateProfile::new(psi)?)
    }

    pub fn theorem2_from(&self, p: &StateProfile) -> Result<Vec<InequalityReport>> {
        let n = p.n_qubits;
        require_qubits(
            n,
            n >= 3,
            "the mutual-entropy bounds need at least 3 qubits",
        )?;
        let sum = p.sum_mutual();
        let fp = &p.fingerprint;
        let mut out = vec![
            self.at_most("theorem2.a_lower", 2.0 * p.s_lin_a, sum, fp),
            self.at_most("theorem2.a_upper", sum, n as f64 * p.s_lin_a, fp),
        ];
        if n <= 4 {
            out.push(self.at_most("theorem2.b", sum, (n - 1) as f64 * p.s_lin_a, fp));
        }
        Ok(out)
    }

    /// Three qubits: `τ^{AB} + τ^{AC} + τ_a^{AB} + τ_a^{AC} = 2 S_L(ρ^A)`.
    pub fn three_qubit_equality(&self, psi: &PureState) -> Result<InequalityReport> {
        self.three_qubit_equality_from(&StateProfile::new(psi)?)
    }

    pub fn three_qubit_equality_from(&self, p: &StateProfile) -> Result<InequalityReport> {
        require_qubits(
            p.n_qubits,
            p.n_qubits == 3,
            "the equality holds for exactly 3 qubits",
        )?;
        Ok(InequalityReport::equal(
            "three_qubit_equality",
            p.sum_tangle() + p.sum_tangle_a(),
            2.0 * p.s_lin_a,
            self.tolerance,
            &p.fingerprint,
        ))
    }

    /// `(δ_{N,4} - 1) τ^k ≤ τ_2^k - τ_1^k ≤ (N - 3) τ^k` for qubit `k`.
    pub fn corollary(
        &self,
        psi: &PureState,
        k: usize,
    ) -> Result<(InequalityReport, InequalityReport)> {
        let n = psi.n_qubits();
        if k >= n {
            return Err(Error::QubitOutOfRange {
                index: k,
                n_qubits: n,
            });
        }
        let b = self.bipartitions(psi)?;
        Ok(self.corollary_from(&b, k, &psi.fingerprint()))
    }

    fn bipartitions(&self, psi: &PureState) -> Result<BipartitionTangles> {
        let n = psi.n_qubits();
        require_qubits(n, n >= 4, "the bipartition bounds need at least 4 qubits")?;
        bipartition_tangles(psi)
    }

    fn corollary_from(
        &self,
        b: &BipartitionTangles,
        k: usize,
        fp: &str,
    ) -> (InequalityReport, InequalityReport) {
        let n = b.n_qubits;
        let delta4 = if n == 4 { 1.0 } else { 0.0 };
        let tau = b.single[k];
        let diff = b.tau2_k[k] - b.tau1_k[k];
        (
            self.at_most("corollary.lower", (delta4 - 1.0) * tau, diff, fp)
                .on(&[k]),
            self.at_most("corollary.upper", diff, (n as f64 - 3.0) * tau, fp)
                .on(&[k]),
        )
    }

    /// `(N - 2 + δ_{N,4})/2 · τ_1 ≤ τ_2 ≤ (N - 2) τ_1`
    pub fn aggregate_bound(&self, psi: &PureState) -> Result<(InequalityReport, InequalityReport)> {
        let b = self.bipartitions(psi)?;
        Ok(self.aggregate_from(&b, &psi.fingerprint()))
    }

    fn aggregate_from(
        &self,
        b: &BipartitionTangles,
        fp: &str,
    ) -> (InequalityReport, InequalityReport) {
        let n = b.n_qubits as f64;
        let delta4 = if b.n_qubits == 4 { 1.0 } else { 0.0 };
        (
            self.at_most(
                "aggregate.lower",
                (n - 2.0 + delta4) / 2.0 * b.tau1,
                b.tau2,
                fp,
            ),
            self.at_most("aggregate.upper", b.tau2, (n - 2.0) * b.tau1, fp),
        )
    }

    /// Every relation applicable to an `N`-qubit pure state. Pair relations
    /// are evaluated on each `ρ^{A B_k}`, the corollary on each qubit.
    pub fn evaluate_all(&self, psi: &PureState) -> Result<Vec<InequalityReport>> {
        let p = StateProfile::new(psi)?;
        let fp = p.fingerprint.clone();
        let n = p.n_qubits;
        let mut out = Vec::new();
        if n >= 3 {
            out.push(self.ckw_from(&p)?);
            out.push(self.dual_monogamy_from(&p)?);
            out.push(self.at_most("chain", p.sum_tangle(), p.sum_tangle_a(), &fp));
            out.extend(self.theorem2_from(&p)?);
        }
        if n == 3 {
            out.push(self.three_qubit_equality_from(&p)?);
        }
        for (i, m) in p.pairs.iter().enumerate() {
            let q = [0, i + 1];
            out.push(self.lemma1_from(m, &fp).on(&q));
            out.push(self.claim6_from(m, &fp).on(&q));
            out.push(self.assistance_ceiling_from(m, &fp).on(&q));
        }
        if n >= 4 {
            let b = bipartition_tangles(psi)?;
            for k in 0..n {
                let (lo, hi) = self.corollary_from(&b, k, &fp);
                out.push(lo);
                out.push(hi);
            }
            let (lo, hi) = self.aggregate_from(&b, &fp);
            out.push(lo);
            out.push(hi);
        }
        Ok(out)
    }
}

/// `Σ_k S_L(A:B_k)` rebuilt from the discriminant,
/// `4 p_0 p_1 (M - D)`; an oracle for [`Checker::theorem2`].
pub fn mutual_sum_via_discriminant(psi: &PureState) -> Result<f64> {
    let sf = crate::schmidt::schmidt_cut(psi)?;
    let d = crate::schmidt::discriminant_direct(&sf);
    Ok(4.0 * sf.p0 * sf.p1 * (sf.m() as f64 - d.total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlinalg::{
        haar_random_pure, random_mixed_two_qubit, state_family, stream_rng, ComplexMatrix,
        StateFamily,
    };
    use num_complex::Complex64;
    use proptest::prelude::*;

    fn family(f: StateFamily, n: usize) -> PureState {
        state_family(f, n).unwrap()
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12
    }

    fn bell_rho() -> DensityMatrix {
        family(StateFamily::Bell, 2).density_matrix()
    }

    #[test]
    fn w3_chain_is_tight() {
        let c = Checker::default();
        let (ckw, dual) = c.chain(&family(StateFamily::W, 3)).unwrap();
        assert!(close(ckw.lhs, 8.0 / 9.0) && close(ckw.rhs, 8.0 / 9.0));
        assert_eq!(ckw.verdict, Verdict::Saturated);
        assert!(close(dual.lhs, 8.0 / 9.0) && close(dual.rhs, 8.0 / 9.0));
        assert_eq!(dual.verdict, Verdict::Saturated);
    }

    #[test]
    fn ghz3_chain() {
        let c = Checker::default();
        let (ckw, dual) = c.chain(&family(StateFamily::Ghz, 3)).unwrap();
        assert!(close(ckw.lhs, 0.0) && close(ckw.rhs, 1.0));
        assert_eq!(ckw.verdict, Verdict::Holds);
        assert!(close(dual.lhs, 1.0) && close(dual.rhs, 2.0));
        assert_eq!(dual.verdict, Verdict::Holds);
        let eq = c
            .three_qubit_equality(&family(StateFamily::Ghz, 3))
            .unwrap();
        assert!(close(eq.lhs, 2.0) && close(eq.rhs, 2.0));
        assert_eq!(eq.verdict, Verdict::Saturated);
    }

    #[test]
    fn ghz3_assistance_matches_a_decomposition() {
        // the Hadamard-mixed eigenbasis of a GHZ marginal is two Bell states
        use crate::measures::decomposition_average_concurrence;
        use crate::qlinalg::decomposition_from_unitary;
        let ghz = family(StateFamily::Ghz, 3);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let u = ComplexMatrix::from_real_rows(&[&[h, h], &[h, -h]]);
        let p = StateProfile::new(&ghz).unwrap();
        for k in 1..3 {
            let rho = ghz.reduce(&[0, k]).unwrap();
            let d = decomposition_from_unitary(&rho, &u).unwrap();
            let avg = decomposition_average_concurrence(&d).unwrap();
            assert!(close(avg, 1.0));
            assert!(close(p.pairs[k - 1].coa, avg));
        }
    }

    #[test]
    fn product_saturates_everything() {
        let c = Checker::default();
        let psi = family(StateFamily::Product, 3);
        for r in c.evaluate_all(&psi).unwrap() {
            assert_eq!(r.verdict, Verdict::Saturated, "{}", r.name);
            assert!(r.lhs.abs() < 1e-12 && r.rhs.abs() < 1e-12);
        }
    }

    #[test]
    fn two_qubit_relations() {
        let c = Checker::default();
        let mixed = DensityMatrix::maximally_mixed(vec![0, 1]);
        let l = c.lemma1(&mixed).unwrap();
        assert!(close(l.lhs, 0.25) && close(l.rhs, 1.0));
        assert_eq!(l.verdict, Verdict::Holds);
        let l = c.lemma1(&bell_rho()).unwrap();
        assert!(close(l.lhs, 1.0) && close(l.rhs, 1.0));
        assert_eq!(l.verdict, Verdict::Saturated);
        let cl = c.claim6(&bell_rho()).unwrap();
        assert!(close(cl.lhs, 2.0) && close(cl.rhs, 2.0));
        assert_eq!(cl.verdict, Verdict::Saturated);
        assert!(!c.claim6(&mixed).unwrap().is_violated());
        assert!(c
            .lemma1(&family(StateFamily::W, 3).density_matrix())
            .is_err());
    }

    #[test]
    fn theorem2_on_families() {
        let c = Checker::default();
        let reports = c.theorem2(&family(StateFamily::W, 3)).unwrap();
        assert_eq!(reports.len(), 3);
        let lower = &reports[0];
        assert!(close(lower.lhs, 16.0 / 9.0) && close(lower.rhs, 16.0 / 9.0));
        assert_eq!(lower.verdict, Verdict::Saturated);
        assert_eq!(reports[2].verdict, Verdict::Saturated);
        for n in 3..=4 {
            let r = c.theorem2(&family(StateFamily::Ghz, n)).unwrap();
            assert_eq!(r[2].name, "theorem2.b");
            assert_eq!(r[2].verdict, Verdict::Saturated);
        }
        assert_eq!(c.theorem2(&family(StateFamily::Ghz, 5)).unwrap().len(), 2);
    }

    #[test]
    fn ghz5_corollary_and_ghz4_aggregate() {
        let c = Checker::default();
        let (lo, hi) = c.corollary(&family(StateFamily::Ghz, 5), 0).unwrap();
        assert!(close(lo.rhs, 0.0) && close(lo.lhs, -1.0));
        assert!(close(hi.lhs, 0.0) && close(hi.rhs, 2.0));
        let (lo, hi) = c.aggregate_bound(&family(StateFamily::Ghz, 4)).unwrap();
        assert!(close(lo.lhs, 6.0) && close(lo.rhs, 6.0));
        assert_eq!(lo.verdict, Verdict::Saturated);
        assert!(close(hi.rhs, 8.0));
    }

    #[test]
    fn qubit_count_errors() {
        let c = Checker::default();
        let bell = family(StateFamily::Bell, 2);
        assert!(c.ckw(&bell).is_err());
        assert!(c.three_qubit_equality(&family(StateFamily::W, 4)).is_err());
        assert!(c.corollary(&family(StateFamily::W, 3), 0).is_err());
        assert!(c.corollary(&family(StateFamily::W, 4), 4).is_err());
        assert!(c.aggregate_bound(&family(StateFamily::Ghz, 3)).is_err());
        assert!(Checker::new(0.0).is_err());
        assert_eq!(c.evaluate_all(&bell).unwrap().len(), 3);
    }

    #[test]
    fn with_party_a_moves_the_qubit() {
        let psi = PureState::basis(3, 0b100).unwrap();
        let moved = with_party_a(&psi, 2).unwrap();
        assert_eq!(moved.amplitudes()[0b001], Complex64::new(1.0, 0.0));
        assert_eq!(with_party_a(&psi, 0).unwrap(), psi);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn nothing_is_violated(seed in any::<u64>(), n in 2usize..6) {
            let psi = haar_random_pure(n, seed).unwrap();
            for r in Checker::default().evaluate_all(&psi).unwrap() {
                prop_assert!(!r.is_violated(), "{} {} {}", r.name, r.lhs, r.rhs);
            }
        }

        #[test]
        fn theorem2_matches_discriminant(seed in any::<u64>(), n in 3usize..7) {
            let psi = haar_random_pure(n, seed).unwrap();
            let p = StateProfile::new(&psi).unwrap();
            let oracle = mutual_sum_via_discriminant(&psi).unwrap();
            prop_assert!((p.sum_mutual() - oracle).abs() < 1e-9);
        }

        #[test]
        fn chain_is_ordered(seed in any::<u64>(), n in 3usize..6) {
            let psi = haar_random_pure(n, seed).unwrap();
            let (ckw, dual) = Checker::default().chain(&psi).unwrap();
            prop_assert_eq!(ckw.rhs, dual.lhs);
            prop_assert!(ckw.lhs <= dual.rhs + 1e-9);
        }

        #[test]
        fn every_party_a(seed in any::<u64>(), q in 0usize..4) {
            let psi = with_party_a(&haar_random_pure(4, seed).unwrap(), q).unwrap();
            let (ckw, dual) = Checker::default().chain(&psi).unwrap();
            prop_assert!(!ckw.is_violated() && !dual.is_violated());
        }

        #[test]
        fn mixed_pair_relations(seed in any::<u64>()) {
            let rho = random_mixed_two_qubit(&mut stream_rng(seed, 0));
            let c = Checker::default();
            prop_assert!(!c.lemma1(&rho).unwrap().is_violated());
            prop_assert!(!c.claim6(&rho).unwrap().is_violated());
            prop_assert!(!c.assistance_ceiling(&rho).unwrap().is_violated());
        }
    }

    #[test]
    fn ceiling_on_a_product_mixture() {
        let m = ComplexMatrix::from_diag(&[0.5, 0.0, 0.5, 0.0]);
        let rho = DensityMatrix::two_qubit(m).unwrap();
        let r = Checker::default().assistance_ceiling(&rho).unwrap();
        assert!(close(r.lhs, 0.0) && close(r.rhs, 0.0));
    }
}
