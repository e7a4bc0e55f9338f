//! Resultants over ℤ by the subresultant polynomial remainder sequence.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ZPoly;

fn pow(b: &BigInt, e: usize) -> BigInt {
    num_traits::pow(b.clone(), e)
}

/// `Res(f, g)` for nonzero `f`, `g`.
///
/// Fraction-free: every division in the sequence is exact over ℤ. The
/// resultant of two constants is 1; `Res(c, g) = c^deg(g)`.
pub fn resultant_z(f: &ZPoly, g: &ZPoly) -> BigInt {
    assert!(
        !f.is_zero() && !g.is_zero(),
        "resultant of the zero polynomial"
    );
    let (mut a, mut b) = (f.clone(), g.clone());
    let mut sign = false;
    let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
    if da < db {
        std::mem::swap(&mut a, &mut b);
        sign ^= da % 2 == 1 && db % 2 == 1;
    }
    let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
    if db == 0 {
        return pow(b.leading().unwrap(), da);
    }
    let (ca, cb) = (a.content(), b.content());
    let t = pow(&ca, db) * pow(&cb, da);
    a = a.primitive_part();
    b = b.primitive_part();
    let mut g_ = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign = !sign;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        let div = &g_ * pow(&h, delta);
        b = r
            .div_scalar_exact(&div)
            .expect("subresultant division is exact");
        g_ = a.leading().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            pow(&g_, delta) / pow(&h, delta - 1)
        };
        match b.degree() {
            None => return BigInt::zero(),
            Some(0) => break,
            Some(_) => {}
        }
    }
    let da = a.degree().unwrap();
    let lb = b.leading().unwrap();
    let h = if da == 0 {
        h
    } else {
        pow(lb, da) / pow(&h, da - 1)
    };
    let res = t * h;
    if sign {
        -res
    } else {
        res
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Sylvester matrix determinant by Bareiss fraction-free elimination.
    fn sylvester_det(f: &ZPoly, g: &ZPoly) -> BigInt {
        let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
        let size = m + n;
        if size == 0 {
            return BigInt::one();
        }
        let mut mat = vec![vec![BigInt::zero(); size]; size];
        for r in 0..n {
            for k in 0..=m {
                mat[r][r + k] = f.coeff(m - k);
            }
        }
        for r in 0..m {
            for k in 0..=n {
                mat[n + r][r + k] = g.coeff(n - k);
            }
        }
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..size {
            if mat[k][k].is_zero() {
                let Some(swap) = (k + 1..size).find(|&r| !mat[r][k].is_zero()) else {
                    return BigInt::zero();
                };
                mat.swap(k, swap);
                sign = -sign;
            }
            for i in k + 1..size {
                for j in k + 1..size {
                    let v = &mat[i][j] * &mat[k][k] - &mat[i][k] * &mat[k][j];
                    mat[i][j] = v / &prev;
                }
                mat[i][k] = BigInt::zero();
            }
            prev = mat[k][k].clone();
        }
        sign * &mat[size - 1][size - 1]
    }

    fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize) -> ZPoly {
        loop {
            let deg = rng.gen_range(0..=max_deg);
            let coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-9..=9)).collect();
            let f = ZPoly::from_i64(&coeffs);
            if !f.is_zero() {
                return f;
            }
        }
    }

    #[test]
    fn linear_case() {
        let f = ZPoly::from_i64(&[-1, 1]);
        let g = ZPoly::from_i64(&[1, 1]);
        assert_eq!(resultant_z(&f, &g), BigInt::from(2));
        assert_eq!(sylvester_det(&f, &g), BigInt::from(2));
    }

    #[test]
    fn constants_and_common_roots() {
        let c = ZPoly::from_i64(&[3]);
        let g = ZPoly::from_i64(&[1, 0, 2]);
        assert_eq!(resultant_z(&c, &g), BigInt::from(9));
        assert_eq!(resultant_z(&g, &c), BigInt::from(9));
        let f = ZPoly::from_i64(&[-2, 1]).mul(&ZPoly::from_i64(&[5, 1, 1]));
        let h = ZPoly::from_i64(&[-2, 1]).mul(&ZPoly::from_i64(&[7, 3]));
        assert!(resultant_z(&f, &h).is_zero());
    }

    #[test]
    fn matches_sylvester_determinant() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut nontrivial = 0;
        for _ in 0..200 {
            let f = random_poly(&mut rng, 5);
            let g = random_poly(&mut rng, 5);
            let r = resultant_z(&f, &g);
            assert_eq!(r, sylvester_det(&f, &g), "f = {f}, g = {g}");
            if f.degree() > Some(1) && g.degree() > Some(1) {
                nontrivial += 1;
            }
        }
        assert!(nontrivial >= 20);
    }

    #[test]
    fn swap_sign() {
        // Res(g, f) = (-1)^(deg f deg g) Res(f, g)
        let f = ZPoly::from_i64(&[1, 2, 0, 1]);
        let g = ZPoly::from_i64(&[4, -1, 0, 0, 3]);
        let h = ZPoly::from_i64(&[4, -1, 3]);
        let k = ZPoly::from_i64(&[2, 5, 0, 0, 0, -3]);
        assert_eq!(resultant_z(&g, &f), resultant_z(&f, &g));
        assert_eq!(resultant_z(&k, &f), -resultant_z(&f, &k));
        assert_eq!(resultant_z(&h, &f), resultant_z(&f, &h));
    }
}
