/// Resource caps shared by every Gröbner-based computation.
///
/// Breaching a cap is always an error; partial results are discarded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest total degree of an S-pair lcm that Buchberger will process.
    pub max_degree: u32,
    /// Largest number of S-pairs processed in one basis computation.
    pub max_pairs: usize,
    /// Largest number of quotient steps in a saturation.
    pub sat_bound: usize,
    /// Highest degree tabulated by graded-piece comparisons.
    pub s_max: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_degree: 200,
            max_pairs: 200_000,
            sat_bound: 32,
            s_max: 6,
        }
    }
}
