use super::gcd::gcd;
use super::poly::{integer_content, MultiPoly};
use super::rational::Rational;
use super::AlgebraError;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Reduced rational function `num / den` in the Reeb parameters.
///
/// Canonical form: `num` and `den` are coprime, both have integer coefficients
/// whose joint gcd is 1, and the graded-lex leading coefficient of `den` is
/// positive. Structural equality is therefore mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    /// Reduces `num / den` to canonical form.
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero(den.nvars()));
        }
        let g = gcd(&num, &den);
        if g.is_constant() {
            return Ok(Self::from_coprime(num, den));
        }
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        Ok(Self::from_coprime(num, den))
    }

    /// Scalar normalization only; the caller guarantees `gcd(num, den) = 1`.
    fn from_coprime(num: MultiPoly, den: MultiPoly) -> Self {
        if num.is_zero() {
            return Self::zero(den.nvars());
        }
        let mut c = integer_content(
            num.terms()
                .map(|(_, c)| c)
                .chain(den.terms().map(|(_, c)| c)),
        );
        if den.leading_coeff().unwrap().is_negative() {
            c = -c;
        }
        let inv = c.recip();
        RatFunc {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn zero(nvars: usize) -> Self {
        RatFunc {
            num: MultiPoly::zero(nvars),
            den: MultiPoly::one(nvars),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::from_poly(MultiPoly::constant(nvars, c))
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let n = p.nvars();
        Self::from_coprime(p, MultiPoly::one(n))
    }

    /// `1 / p`.
    pub fn reciprocal_of(p: &MultiPoly) -> Result<Self, AlgebraError> {
        if p.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::from_coprime(MultiPoly::one(p.nvars()), p.clone()))
    }

    pub fn numer(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denom(&self) -> &MultiPoly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars());
        }
        Self::from_coprime(self.num.scale(c), self.den.clone())
    }

    pub fn recip(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<Self, AlgebraError> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        Self::from_coprime(self.num.pow(exp), self.den.pow(exp))
    }

    /// Partial derivative in `b_var` by the quotient rule, reduced.
    pub fn derivative(&self, var: usize) -> Result<Self, AlgebraError> {
        let dn = self.num.derivative(var)?;
        let dd = self.den.derivative(var)?;
        if dd.is_zero() {
            return Ok(Self::from_coprime(dn, self.den.clone()).reduced_against_den());
        }
        // d(n/q) = (n' q - n q') / q^2. With g = gcd(q, q') and q = g h, the
        // numerator (n' h - n q'/g) can only share factors with h * q.
        let g = gcd(&self.den, &dd);
        let h = self.den.div_exact(&g).expect("gcd divides denominator");
        let dd_g = dd.div_exact(&g).expect("gcd divides derivative");
        let num = &(&dn * &h) - &(&self.num * &dd_g);
        let den = &self.den * &h;
        Self::new(num, den)
    }

    fn reduced_against_den(self) -> Self {
        Self::new(self.num, self.den).expect("denominator is nonzero")
    }

    /// Directional derivative `sum_i dir[i] * d/db_i`.
    pub fn directional_derivative(&self, dir: &[Rational]) -> Result<Self, AlgebraError> {
        if dir.len() != self.nvars() {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.nvars(),
                found: dir.len(),
            });
        }
        let mut acc = Self::zero(self.nvars());
        for (i, c) in dir.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = &acc + &self.derivative(i)?.scale(c);
        }
        Ok(acc)
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational, AlgebraError> {
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return Err(AlgebraError::PoleAtPoint);
        }
        Ok(self.num.eval(point)? / d)
    }

    /// Taylor coefficients `c_0..=c_order` of `s -> f(point + s * dir)` at `s = 0`,
    /// so that `D_dir^k f(point) = k! * c_k`.
    pub fn taylor_along(
        &self,
        point: &[Rational],
        dir: &[Rational],
        order: usize,
    ) -> Result<Vec<Rational>, AlgebraError> {
        let n = self.num.taylor_along(point, dir, order)?;
        let d = self.den.taylor_along(point, dir, order)?;
        if d[0].is_zero() {
            return Err(AlgebraError::PoleAtPoint);
        }
        // n = q * d, solved term by term.
        let mut q: Vec<Rational> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = n[k].clone();
            for j in 0..k {
                acc -= &q[j] * &d[k - j];
            }
            q.push(acc / &d[0]);
        }
        Ok(q)
    }

    /// Substitutes `b_var -> factor * b_var`.
    pub fn scale_var(&self, var: usize, factor: &Rational) -> Result<Self, AlgebraError> {
        if factor.is_zero() {
            return Self::new(
                substitute_zero(&self.num, var),
                substitute_zero(&self.den, var),
            );
        }
        Ok(Self::from_coprime(
            self.num.scale_var(var, factor),
            self.den.scale_var(var, factor),
        ))
    }
}

fn substitute_zero(p: &MultiPoly, var: usize) -> MultiPoly {
    p.coeffs_in(var)
        .into_iter()
        .next()
        .unwrap_or_else(|| MultiPoly::zero(p.nvars()))
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone()).unwrap();
        }
        // With g = gcd(b, d), any common factor of the new numerator and b*d/g divides g.
        let g = gcd(&self.den, &rhs.den);
        let bg = self.den.div_exact(&g).expect("gcd divides");
        let dg = rhs.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &dg) + &(&rhs.num * &bg);
        if num.is_zero() {
            return RatFunc::zero(self.nvars());
        }
        let h = gcd(&num, &g);
        let num = num.div_exact(&h).expect("gcd divides");
        let g = g.div_exact(&h).expect("gcd divides");
        RatFunc::from_coprime(num, &(&bg * &dg) * &g)
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero(self.nvars());
        }
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let a = self.num.div_exact(&g1).expect("gcd divides");
        let d = rhs.den.div_exact(&g1).expect("gcd divides");
        let c = rhs.num.div_exact(&g2).expect("gcd divides");
        let b = self.den.div_exact(&g2).expect("gcd divides");
        RatFunc::from_coprime(&a * &c, &b * &d)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        &self + &rhs
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        &self - &rhs
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        &self * &rhs
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &MultiPoly| {
            if p.len() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        if self.den.as_constant().map(|c| c.is_one()).unwrap_or(false) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}
