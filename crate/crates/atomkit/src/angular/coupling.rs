use num_complex::Complex64;

use super::halfint::{valid_pair, HalfInt};
use super::harmonics::SphericalHarmonic;
use super::AngularError;

/// Which total-j eigenspace of l x 1/2 a spinor harmonic lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// j = l + 1/2, where sigma.L acts as +l.
    Plus,
    /// j = l - 1/2, where sigma.L acts as -(l+1). Empty for l = 0.
    Minus,
}

/// One orbital component of a spinor harmonic: coeff * Y_l^m tensored with
/// a definite spin projection.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinorComponent {
    pub m: i32,
    pub spin_up: bool,
    pub coeff: f64,
}

/// Simultaneous eigenstate of J^2, J3, L^2, S^2 built from Y_l spin-up and
/// spin-down components, with total magnetic number k.
#[derive(Debug, Clone)]
pub struct SpinorHarmonic {
    l: u32,
    j: HalfInt,
    k: HalfInt,
    branch: Branch,
    components: Vec<SpinorComponent>,
}

/// Couples orbital angular momentum l with spin 1/2 into the j eigenstate of
/// magnetic number k. Coefficients are fixed by requiring the orbital
/// component with the larger |m| to carry a positive coefficient.
pub fn couple_l_half(l: u32, j: HalfInt, k: HalfInt) -> Result<SpinorHarmonic, AngularError> {
    let dl = 2 * l as i32;
    let branch = if j.doubled() == dl + 1 {
        Branch::Plus
    } else if j.doubled() == dl - 1 {
        if l == 0 {
            return Err(AngularError::EmptyMinusBranch);
        }
        Branch::Minus
    } else {
        return Err(AngularError::BranchMismatch { l, j });
    };
    if !valid_pair(j, k) {
        return Err(AngularError::InvalidPair { twice_j: j.doubled(), twice_m: k.doubled() });
    }

    let dk = k.doubled();
    let denom = f64::from(2 * (dl + 1));
    let big = (f64::from(dl + dk + 1) / denom).sqrt(); // sqrt((l + k + 1/2)/(2l + 1))
    let small = (f64::from(dl - dk + 1) / denom).sqrt(); // sqrt((l - k + 1/2)/(2l + 1))
    let (mut c_up, mut c_down) = match branch {
        Branch::Plus => (big, small),
        Branch::Minus => (-small, big),
    };
    // Highest-|m| component sits spin-down for k > 0, spin-up for k < 0
    // (k = 0 cannot occur: j is half-odd, so k is too).
    if dk < 0 && c_up < 0.0 {
        c_up = -c_up;
        c_down = -c_down;
    }

    let m_up = (dk - 1) / 2;
    let m_down = (dk + 1) / 2;
    let mut components = Vec::with_capacity(2);
    if m_up.unsigned_abs() <= l && c_up != 0.0 {
        components.push(SpinorComponent { m: m_up, spin_up: true, coeff: c_up });
    }
    if m_down.unsigned_abs() <= l && c_down != 0.0 {
        components.push(SpinorComponent { m: m_down, spin_up: false, coeff: c_down });
    }
    Ok(SpinorHarmonic { l, j, k, branch, components })
}

impl SpinorHarmonic {
    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn j(&self) -> HalfInt {
        self.j
    }

    pub fn k(&self) -> HalfInt {
        self.k
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }

    pub fn components(&self) -> &[SpinorComponent] {
        &self.components
    }

    /// Eigenvalue of sigma.L on this state: l on the plus branch, -(l+1)
    /// on the minus branch.
    pub fn sigma_l_eigenvalue(&self) -> f64 {
        match self.branch {
            Branch::Plus => f64::from(self.l),
            Branch::Minus => -f64::from(self.l + 1),
        }
    }

    /// j(j+1), reproduced by l(l+1) + 3/4 + sigma.L.
    pub fn j_squared(&self) -> f64 {
        self.j.casimir()
    }

    /// Value of the two spin components at a direction on the sphere.
    pub fn eval(&self, theta: f64, phi: f64) -> [Complex64; 2] {
        let mut out = [Complex64::new(0.0, 0.0); 2];
        for comp in &self.components {
            let y = SphericalHarmonic::new(self.l, comp.m)
                .expect("component m validated at construction")
                .eval(theta, phi);
            let slot = if comp.spin_up { 0 } else { 1 };
            out[slot] += comp.coeff * y;
        }
        out
    }
}

/// Matrix of sigma.L restricted to the two-dimensional weight space
/// span{Y_l^{k-1/2} up, Y_l^{k+1/2} down}, in that basis. Its eigenvalues
/// are l and -(l+1) independent of k; `couple_l_half` must produce its
/// eigenvectors.
pub fn sigma_l_weight_matrix(l: u32, k: HalfInt) -> [[f64; 2]; 2] {
    let lf = f64::from(l);
    let kf = k.value();
    // Off-diagonal from the ladder action: sqrt((l+1/2)^2 - k^2).
    let c = ((lf + 0.5) * (lf + 0.5) - kf * kf).sqrt();
    [[kf - 0.5, c], [c, -(kf + 0.5)]]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeff(s: &SpinorHarmonic, spin_up: bool) -> f64 {
        s.components()
            .iter()
            .find(|c| c.spin_up == spin_up)
            .map_or(0.0, |c| c.coeff)
    }

    #[test]
    fn known_coupling_table_l1() {
        // j = 3/2, k = 1/2: sqrt(2/3) Y_1^0 up + sqrt(1/3) Y_1^1 down.
        let s = couple_l_half(1, HalfInt::from_doubled(3), HalfInt::HALF).unwrap();
        assert!((coeff(&s, true) - (2.0f64 / 3.0).sqrt()).abs() < 1e-15);
        assert!((coeff(&s, false) - (1.0f64 / 3.0).sqrt()).abs() < 1e-15);

        // j = 1/2, k = 1/2: -sqrt(1/3) Y_1^0 up + sqrt(2/3) Y_1^1 down.
        let s = couple_l_half(1, HalfInt::HALF, HalfInt::HALF).unwrap();
        assert!((coeff(&s, true) + (1.0f64 / 3.0).sqrt()).abs() < 1e-15);
        assert!((coeff(&s, false) - (2.0f64 / 3.0).sqrt()).abs() < 1e-15);

        // k = -1/2 on the minus branch flips globally so the m = -1
        // component comes out positive.
        let s = couple_l_half(1, HalfInt::HALF, HalfInt::from_doubled(-1)).unwrap();
        assert!((coeff(&s, true) - (2.0f64 / 3.0).sqrt()).abs() < 1e-15);
        assert!((coeff(&s, false) + (1.0f64 / 3.0).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn stretched_state_is_single_component() {
        // k = j = l + 1/2 is pure Y_l^l spin-up; the spin-down partner
        // would need m = l + 1 and carries coefficient zero.
        let s = couple_l_half(2, HalfInt::from_doubled(5), HalfInt::from_doubled(5)).unwrap();
        assert_eq!(s.components().len(), 1);
        let c = s.components()[0];
        assert!(c.spin_up);
        assert_eq!(c.m, 2);
        assert!((c.coeff - 1.0).abs() < 1e-15);
    }

    #[test]
    fn unit_norm() {
        for l in 1..=4u32 {
            for branch_dj in [2 * l as i32 + 1, 2 * l as i32 - 1] {
                let j = HalfInt::from_doubled(branch_dj);
                let mut dk = -j.doubled();
                while dk <= j.doubled() {
                    let s = couple_l_half(l, j, HalfInt::from_doubled(dk)).unwrap();
                    let norm: f64 = s.components().iter().map(|c| c.coeff * c.coeff).sum();
                    assert!((norm - 1.0).abs() < 1e-14);
                    dk += 2;
                }
            }
        }
    }

    #[test]
    fn weight_matrix_action_matches_eigenvalue() {
        for l in 1..=4u32 {
            for branch_dj in [2 * l as i32 + 1, 2 * l as i32 - 1] {
                let j = HalfInt::from_doubled(branch_dj);
                let mut dk = -(2 * l as i32) + 1; // interior k, both components present
                while dk < 2 * l as i32 {
                    let k = HalfInt::from_doubled(dk);
                    let s = couple_l_half(l, j, k).unwrap();
                    let m = sigma_l_weight_matrix(l, k);
                    let v = [coeff(&s, true), coeff(&s, false)];
                    let mv = [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]];
                    let lam = s.sigma_l_eigenvalue();
                    assert!((mv[0] - lam * v[0]).abs() < 1e-13, "l={l} j={j} k={k}");
                    assert!((mv[1] - lam * v[1]).abs() < 1e-13, "l={l} j={j} k={k}");
                    dk += 2;
                }
            }
        }
    }

    #[test]
    fn error_cases() {
        assert_eq!(
            couple_l_half(0, HalfInt::from_doubled(-1), HalfInt::HALF).unwrap_err().name(),
            "empty-minus-branch"
        );
        assert_eq!(
            couple_l_half(2, HalfInt::HALF, HalfInt::HALF).unwrap_err().name(),
            "branch-mismatch"
        );
        assert_eq!(
            couple_l_half(1, HalfInt::from_doubled(3), HalfInt::from_doubled(5))
                .unwrap_err()
                .name(),
            "invalid-quantum-pair"
        );
    }
}
