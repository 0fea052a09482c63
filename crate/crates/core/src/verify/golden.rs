//! Published tables for the partitions of 9, in frequency notation.

/// `(srank mod 4, stcrank mod 5, partitions)`.
pub const TABLE_STCRANK_NINE: &[(u32, u32, &[&str])] = &[
    (
        0,
        0,
        &["(3^3)", "(1^3,2^1,4^1)", "(1^1,3^1,5^1)", "(4^1,5^1)"],
    ),
    (0, 1, &["(1^5,2^2)", "(1^4,5^1)", "(1^2,2^1,5^1)", "(9^1)"]),
    (
        0,
        2,
        &["(1^4,2^1,3^1)", "(1^3,3^2)", "(1^1,4^2)", "(2^2,5^1)"],
    ),
    (
        0,
        3,
        &["(1^1,2^4)", "(1^6,3^1)", "(1^1,2^1,6^1)", "(2^1,7^1)"],
    ),
    (0, 4, &["(1^9)", "(1^2,2^2,3^1)", "(2^3,3^1)", "(1^2,7^1)"]),
    (2, 0, &["(1^3,2^3)", "(1^3,6^1)"]),
    (2, 1, &["(1^1,2^1,3^2)", "(1^2,3^1,4^1)"]),
    (2, 2, &["(1^5,4^1)", "(1^1,8^1)"]),
    (2, 3, &["(1^7,2^1)", "(1^1,2^2,4^1)"]),
    (2, 4, &["(2^1,3^1,4^1)", "(3^1,6^1)"]),
];

/// `(srank mod 4, members by 5-core crank 0..4)`, one entry per orbit.
pub const TABLE_ORBITS_NINE: &[(u32, [&str; 5])] = &[
    (
        0,
        [
            "(1^4,5^1)",
            "(1^3,3^2)",
            "(1^4,2^1,3^1)",
            "(1^1,2^1,6^1)",
            "(2^2,5^1)",
        ],
    ),
    (
        0,
        [
            "(1^5,2^2)",
            "(2^3,3^1)",
            "(1^2,7^1)",
            "(4^1,5^1)",
            "(1^3,2^1,4^1)",
        ],
    ),
    (
        0,
        ["(3^3)", "(1^9)", "(1^1,3^1,5^1)", "(1^2,2^2,3^1)", "(9^1)"],
    ),
    (
        0,
        [
            "(2^1,7^1)",
            "(1^2,2^1,5^1)",
            "(1^1,2^4)",
            "(1^6,3^1)",
            "(1^1,4^2)",
        ],
    ),
    (
        2,
        [
            "(1^3,2^3)",
            "(1^3,6^1)",
            "(2^1,3^1,4^1)",
            "(1^1,8^1)",
            "(1^2,3^1,4^1)",
        ],
    ),
    (
        2,
        [
            "(3^1,6^1)",
            "(1^1,2^2,4^1)",
            "(1^7,2^1)",
            "(1^1,2^1,3^2)",
            "(1^5,4^1)",
        ],
    ),
];
