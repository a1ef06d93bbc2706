//! Reference values used as fixed targets.

/// Quadrangle totals, `n = 1..=5`.
pub const QUADRANGLE: [u64; 5] = [1, 4, 60, 3328, 678912];

/// Square-pentagon totals `P_{n,0}`, `n = 1..=5`.
pub const SQUARE: [u64; 5] = [1, 3, 29, 901, 89893];

/// Refined 20V polynomials in `τ`, ascending, `n = 1..=5`.
pub const REFINED_20V: [&[u64]; 5] = [
    &[1],
    &[1, 2, 1],
    &[4, 15, 22, 15, 4],
    &[60, 328, 772, 1008, 772, 328, 60],
    &[3328, 23868, 76856, 145860, 179088, 145860, 76856, 23868, 3328],
];

/// Refined DT polynomials in `t`, ascending, `n = 1..=5`.
pub const REFINED_DT: [&[u64]; 5] = [
    &[1],
    &[3, 1],
    &[37, 19, 4],
    &[1780, 1100, 388, 60],
    &[324948, 222716, 100724, 27196, 3328],
];

/// 6V one-point functions as (numerator coefficients, denominator), `n = 1..=5`.
pub const H6V: [(&[u64], u64); 5] = [
    (&[1], 1),
    (&[1, 1], 2),
    (&[4, 7, 4], 15),
    (&[15, 37, 37, 15], 104),
    (&[64, 203, 282, 203, 64], 816),
];
