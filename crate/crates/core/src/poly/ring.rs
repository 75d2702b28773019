use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};

/// A total monomial order compatible with multiplication.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    /// Block order: the first `front` variables are compared first with
    /// `front_order`, ties are broken on the remaining variables with
    /// `back_order`. Any monomial containing a front variable is larger than
    /// every monomial free of them.
    Elimination {
        front: usize,
        front_order: Box<MonomialOrder>,
        back_order: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    /// Elimination order with grevlex on the front block.
    pub fn elimination(front: usize, back_order: MonomialOrder) -> Self {
        MonomialOrder::Elimination {
            front,
            front_order: Box::new(MonomialOrder::GrevLex),
            back_order: Box::new(back_order),
        }
    }

    /// Compares two exponent vectors of equal length.
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => {
                let da: u64 = a.iter().map(|&e| e as u64).sum();
                let db: u64 = b.iter().map(|&e| e as u64).sum();
                da.cmp(&db).then_with(|| {
                    for (x, y) in a.iter().zip(b).rev() {
                        if x != y {
                            return y.cmp(x);
                        }
                    }
                    Ordering::Equal
                })
            }
            MonomialOrder::Elimination {
                front,
                front_order,
                back_order,
            } => {
                let f = (*front).min(a.len());
                front_order
                    .cmp(&a[..f], &b[..f])
                    .then_with(|| back_order.cmp(&a[f..], &b[f..]))
            }
        }
    }

    /// The order used inside the trailing block, i.e. what remains after
    /// eliminating the front variables.
    pub fn base(&self) -> MonomialOrder {
        match self {
            MonomialOrder::Elimination { back_order, .. } => back_order.base(),
            other => other.clone(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::GrevLex => "grevlex",
            MonomialOrder::Elimination { .. } => "elimination",
        }
    }
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingData {
    vars: Vec<String>,
    order: MonomialOrder,
}

/// A polynomial ring `Q[vars]` together with its monomial order.
///
/// Cheap to clone; equality is structural.
#[derive(Clone, Debug, Hash)]
pub struct RingContext(Arc<RingData>);

impl PartialEq for RingContext {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for RingContext {}

impl RingContext {
    pub fn new<I, S>(vars: I, order: MonomialOrder) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() {
                return Err(AlgebraError::InvalidArgument("empty variable name".into()));
            }
            if vars[..i].contains(v) {
                return Err(AlgebraError::NameCollision(v.clone()));
            }
        }
        if let MonomialOrder::Elimination { front, .. } = &order {
            if *front > vars.len() {
                return Err(AlgebraError::InvalidArgument(format!(
                    "elimination block of size {front} in a ring with {} variables",
                    vars.len()
                )));
            }
        }
        Ok(RingContext(Arc::new(RingData { vars, order })))
    }

    pub fn grevlex<I, S>(vars: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::new(vars, MonomialOrder::GrevLex)
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.0.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    /// Appends new variables after the existing ones, keeping the order kind.
    pub fn extend<S: AsRef<str>>(&self, new_vars: &[S]) -> Result<Self> {
        if new_vars.is_empty() {
            return Ok(self.clone());
        }
        let mut vars = self.0.vars.clone();
        for v in new_vars {
            let v = v.as_ref();
            if vars.iter().any(|w| w == v) {
                return Err(AlgebraError::NameCollision(v.to_string()));
            }
            vars.push(v.to_string());
        }
        RingContext::new(vars, self.0.order.clone())
    }

    pub fn with_order(&self, order: MonomialOrder) -> Result<Self> {
        RingContext::new(self.0.vars.clone(), order)
    }

    /// The ring on the remaining variables with the base order.
    pub fn without_vars<S: AsRef<str>>(&self, names: &[S]) -> Result<Self> {
        for n in names {
            if self.var_index(n.as_ref()).is_none() {
                return Err(AlgebraError::UnknownVariable(n.as_ref().to_string()));
            }
        }
        let vars = self
            .0
            .vars
            .iter()
            .filter(|v| !names.iter().any(|n| n.as_ref() == v.as_str()));
        RingContext::new(vars.cloned(), self.0.order.base())
    }

    /// Moves `names` (existing or new) to the front under an elimination order
    /// whose back block uses this ring's base order.
    pub fn with_front_block<S: AsRef<str>>(&self, names: &[S]) -> Result<Self> {
        let mut vars: Vec<String> = names.iter().map(|n| n.as_ref().to_string()).collect();
        vars.extend(
            self.0
                .vars
                .iter()
                .filter(|v| !names.iter().any(|n| n.as_ref() == v.as_str()))
                .cloned(),
        );
        let order = MonomialOrder::elimination(names.len(), self.0.order.base());
        RingContext::new(vars, order)
    }

    /// A name from the reserved `#k` namespace not used by this ring.
    pub fn fresh_reserved(&self) -> String {
        self.fresh_reserved_avoiding(&[])
    }

    pub fn fresh_reserved_avoiding(&self, taken: &[String]) -> String {
        (0..)
            .map(|k| format!("#{k}"))
            .find(|n| self.var_index(n).is_none() && !taken.contains(n))
            .expect("unbounded namespace")
    }

    /// First name of `candidates` (then `prefix1`, `prefix2`, ...) that is
    /// neither a variable nor in `taken`.
    pub(crate) fn fresh_user_name(&self, candidates: &[&str], prefix: &str, taken: &[String]) -> String {
        let free = |n: &str| self.var_index(n).is_none() && !taken.iter().any(|t| t == n);
        candidates
            .iter()
            .map(|c| c.to_string())
            .chain((1..).map(|k| format!("{prefix}{k}")))
            .find(|n| free(n))
            .expect("unbounded namespace")
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.0.vars.join(","))
    }
}
