//! Reference values for the elimination polynomials and the quantities
//! derived from them, as published. Listings are stored highest degree
//! first, in the order they are written out.

use num_bigint::BigInt;

use super::ZPoly;

/// `(alpha, coefficients of g_alpha from y^(3 alpha - 1) down to y^0)`.
pub const G_LISTINGS: [(u32, &[i64]); 5] = [
    (2, &[2, 3, -23, -8, -9, 44]),
    (
        5,
        &[
            -14, -8, 22, -469, -1093, 8852, 6801, 10527, -61068, -18619, -25033, 120197, 13516,
            16822, -71162,
        ],
    ),
    (
        8,
        &[
            130, 57, -187, 4082, 3585, -7667, 156234, 453573, -3916551, -4144622, -7594467,
            48939959, 25221008, 39342423, -213366911, -61811112, -88032825, 422650317, 66303028,
            88882095, -389019163, -25886212, -33211905, 135094180,
        ],
    ),
    (
        11,
        &[
            -3952,
            -1522,
            5474,
            -139802,
            -89324,
            229126,
            -3943602,
            -4392909,
            8336511,
            -180820302,
            -605825169,
            5521784781,
            7111655988,
            14607372831,
            -101269369227,
            -69095625624,
            -119477261853,
            705650100129,
            303870716124,
            475920749355,
            -2503382174319,
            -706243777836,
            -1034492806725,
            4972469163636,
            898579001889,
            1253008322595,
            -5598768742164,
            -591556509206,
            -794043854630,
            3339003167188,
            157572058982,
            205140400010,
            -819352075360,
        ],
    ),
    (
        14,
        &[
            41800,
            14895,
            -56695,
            1691000,
            905631,
            -2596631,
            47250150,
            37894401,
            -85144551,
            1395800990,
            1826164521,
            -3221965511,
            75566097190,
            281332431561,
            -2683745985685,
            -3976231919076,
            -8901790877799,
            65232090577890,
            53701334712609,
            100487514543597,
            -632854611825486,
            -347885978019711,
            -586551837541203,
            3307822221633594,
            1283881108529889,
            2015859062567817,
            -10419893389315746,
            -2892546806289271,
            -4307726185011783,
            20728564105915330,
            4054215382726378,
            5793391583605092,
            -26245535590106350,
            -3451745974770042,
            -4770402189292728,
            20520594631893930,
            1634454816505198,
            2197118421394272,
            -9034762128135730,
            -330180086243950,
            -433563200685120,
            1713531735146800,
        ],
    ),
];

/// Powers of 3 cleared from the bracket polynomial, `(alpha, d_alpha)`.
pub const DENOMINATOR_EXPONENTS: [(u32, u32); 5] = [(2, 2), (5, 6), (8, 10), (11, 15), (14, 19)];

/// Prime factorization of `Res(g_2, g_5)` as written (no sign is given).
pub const RESULTANT_G2_G5_FACTORS: [(u64, u32); 7] = [
    (2, 5),
    (3, 35),
    (17, 2),
    (23, 1),
    (29, 1),
    (103, 1),
    (16069, 1),
];

/// Characteristics left after the prime filter.
pub const SURVIVING_PRIMES: [u32; 4] = [2, 17, 23, 29];

/// `(p, monic gcd(g_2, g_5, g_8) mod p)`, coefficients low degree first.
pub const GCD_CHAIN: [(u32, &[i64]); 4] = [(2, &[0, 1]), (17, &[1]), (23, &[1, 1]), (29, &[10, 1])];

/// `(p, alpha, point, value)`: `g_alpha(point) mod p`.
pub const EVALUATIONS: [(u32, u32, i64, i64); 3] =
    [(23, 11, -1, 12), (29, 11, -10, 0), (29, 14, -10, 2)];

/// The listed `g_alpha`, if `alpha` is one of the five published values.
pub fn g_listing(alpha: u32) -> Option<ZPoly> {
    G_LISTINGS
        .iter()
        .find(|(a, _)| *a == alpha)
        .map(|(_, desc)| ZPoly::new(desc.iter().rev().map(|&c| BigInt::from(c)).collect()))
}

pub fn denominator_exponent(alpha: u32) -> Option<u32> {
    DENOMINATOR_EXPONENTS
        .iter()
        .find(|(a, _)| *a == alpha)
        .map(|&(_, d)| d)
}

/// The product of [`RESULTANT_G2_G5_FACTORS`].
pub fn resultant_g2_g5_magnitude() -> BigInt {
    RESULTANT_G2_G5_FACTORS
        .iter()
        .fold(BigInt::from(1), |acc, &(p, k)| acc * BigInt::from(p).pow(k))
}
