/// Hard default for the number of words a single enumeration may visit.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 1 << 24;
/// Hard default for the size `q^{mn}` of a dense function table.
pub const DEFAULT_TRANSFORM_BUDGET: u64 = 1 << 16;

/// Guardrails on exhaustive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub enumeration: u64,
    pub transform: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { enumeration: DEFAULT_ENUMERATION_BUDGET, transform: DEFAULT_TRANSFORM_BUDGET }
    }
}

impl Limits {
    pub fn with_enumeration(mut self, budget: u64) -> Self {
        self.enumeration = budget;
        self
    }

    pub fn with_transform(mut self, budget: u64) -> Self {
        self.transform = budget;
        self
    }

    pub(crate) fn check_enumeration(&self, needed: Option<u64>) -> crate::Result<u64> {
        check(needed, self.enumeration)
    }

    pub(crate) fn check_transform(&self, needed: Option<u64>) -> crate::Result<u64> {
        check(needed, self.transform)
    }
}

fn check(needed: Option<u64>, budget: u64) -> crate::Result<u64> {
    match needed {
        Some(n) if n <= budget => Ok(n),
        Some(n) => Err(crate::Error::BudgetExceeded { needed: n.to_string(), budget }),
        None => Err(crate::Error::BudgetExceeded { needed: "more than 2^64".into(), budget }),
    }
}

/// `base^exp` or `None` on overflow.
pub(crate) fn checked_pow(base: u64, exp: usize) -> Option<u64> {
    let exp = u32::try_from(exp).ok()?;
    base.checked_pow(exp)
}
