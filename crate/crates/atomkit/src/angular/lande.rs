use super::halfint::HalfInt;
use super::AngularError;

/// Reduced fraction with positive denominator; enough rational arithmetic
/// for Lande factors, which are exact rationals in L and J.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Frac {
    num: i64,
    den: i64,
}

impl Frac {
    fn new(num: i64, den: i64) -> Self {
        assert!(den != 0);
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()) as i64;
        Frac { num: sign * num / g, den: sign * den / g }
    }

    fn add(self, o: Frac) -> Frac {
        Frac::new(self.num * o.den + o.num * self.den, self.den * o.den)
    }

    fn sub(self, o: Frac) -> Frac {
        Frac::new(self.num * o.den - o.num * self.den, self.den * o.den)
    }

    fn div(self, o: Frac) -> Frac {
        assert!(o.num != 0);
        Frac::new(self.num * o.den, self.den * o.num)
    }

    fn scale(self, s: i64) -> Frac {
        Frac::new(self.num * s, self.den)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    if a == 0 {
        return b.max(1);
    }
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

fn validate(l: u32, j: HalfInt) -> Result<(), AngularError> {
    if j.doubled() == 0 {
        return Err(AngularError::ZeroTotalJ);
    }
    let dl = 2 * l as i32;
    if j.doubled() != dl + 1 && j.doubled() != dl - 1 {
        return Err(AngularError::BranchMismatch { l, j });
    }
    Ok(())
}

fn lande_frac(l: u32, j: HalfInt) -> Frac {
    let ll1 = Frac::new(i64::from(l) * (i64::from(l) + 1), 1);
    let dj = i64::from(j.doubled());
    let jj1 = Frac::new(dj * (dj + 2), 4);
    // g = 3/2 + (3/4 - L(L+1)) / (2 J(J+1))
    Frac::new(3, 2).add(Frac::new(3, 4).sub(ll1).div(jj1.scale(2)))
}

/// Lande g factor for a one-electron term (S = 1/2, J = L +/- 1/2),
/// as a reduced fraction (numerator, denominator).
pub fn lande_g_rational(l: u32, j: HalfInt) -> Result<(i64, i64), AngularError> {
    validate(l, j)?;
    let g = lande_frac(l, j);
    Ok((g.num, g.den))
}

pub fn lande_g(l: u32, j: HalfInt) -> Result<f64, AngularError> {
    let (num, den) = lande_g_rational(l, j)?;
    Ok(num as f64 / den as f64)
}

/// The same g factor from the vector-model route: project the orbital and
/// (doubly weighted) spin moments onto J using L.J = (J^2 + L^2 - s^2)/2 and
/// s.J = (J^2 + s^2 - L^2)/2 with X^2 = X(X+1). Algebraically identical to
/// `lande_g`, but assembled from different intermediate quantities; the two
/// must agree exactly in rational arithmetic.
pub fn vector_model_g(l: u32, j: HalfInt) -> Result<(i64, i64), AngularError> {
    validate(l, j)?;
    let dj = i64::from(j.doubled());
    let j2 = Frac::new(dj * (dj + 2), 4);
    let l2 = Frac::new(i64::from(l) * (i64::from(l) + 1), 1);
    let s2 = Frac::new(3, 4);
    let l_dot_j = j2.add(l2).sub(s2).div(Frac::new(2, 1));
    let s_dot_j = j2.add(s2).sub(l2).div(Frac::new(2, 1));
    let g = l_dot_j.add(s_dot_j.scale(2)).div(j2);
    Ok((g.num, g.den))
}
