use num_rational::BigRational;

use crate::limits::Limits;
use crate::poly::RingContext;

/// Polynomial expression with names resolved against one ring.
#[derive(Clone, Debug, PartialEq)]
pub enum PolyExpr {
    Const(BigRational),
    Var(String),
    /// A bound `poly` value.
    Ref(String),
    Add(Box<PolyExpr>, Box<PolyExpr>),
    Sub(Box<PolyExpr>, Box<PolyExpr>),
    Mul(Box<PolyExpr>, Box<PolyExpr>),
    Neg(Box<PolyExpr>),
    Pow(Box<PolyExpr>, u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ValueKind {
    Poly,
    Ideal,
    Matrix,
    Module,
}

impl ValueKind {
    pub fn name(self) -> &'static str {
        match self {
            ValueKind::Poly => "poly",
            ValueKind::Ideal => "ideal",
            ValueKind::Matrix => "matrix",
            ValueKind::Module => "module",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Arg {
    Poly(PolyExpr),
    IdealLit(Vec<PolyExpr>),
    MatrixLit(Vec<Vec<PolyExpr>>),
    /// A bound value of the kind the parameter expects.
    Ref(String),
    Int(i64),
    Vars(Vec<String>),
    Name(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArgSpec {
    Poly,
    Ideal,
    Matrix,
    Module,
    Int,
    Vars,
    Name,
}

/// Result shapes a command can produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Output {
    /// Bindable value living in the call's ring.
    Value(ValueKind),
    /// Ideal in the call's ring minus the eliminated variables.
    Eliminated,
    /// Report-only result.
    Report,
}

macro_rules! commands {
    ($($variant:ident => $name:literal, [$($req:ident),*], [$($opt:ident),*], $out:expr;)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
        pub enum Command {
            $($variant,)*
        }

        impl Command {
            pub const ALL: &'static [Command] = &[$(Command::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(Command::$variant => $name,)*
                }
            }

            pub fn from_name(s: &str) -> Option<Command> {
                match s {
                    $($name => Some(Command::$variant),)*
                    _ => None,
                }
            }

            pub fn required(self) -> &'static [ArgSpec] {
                match self {
                    $(Command::$variant => &[$(ArgSpec::$req,)*],)*
                }
            }

            pub fn optional(self) -> &'static [ArgSpec] {
                match self {
                    $(Command::$variant => &[$(ArgSpec::$opt,)*],)*
                }
            }

            pub fn output(self) -> Output {
                match self {
                    $(Command::$variant => $out,)*
                }
            }
        }
    };
}

commands! {
    Groebner => "groebner", [Ideal], [], Output::Value(ValueKind::Ideal);
    Nf => "nf", [Poly, Ideal], [], Output::Value(ValueKind::Poly);
    Member => "member", [Poly, Ideal], [], Output::Report;
    RadMember => "radmember", [Poly, Ideal], [], Output::Report;
    Power => "power", [Ideal, Int], [], Output::Value(ValueKind::Ideal);
    Intersect => "intersect", [Ideal, Ideal], [], Output::Value(ValueKind::Ideal);
    Quotient => "quotient", [Ideal, Ideal], [], Output::Value(ValueKind::Ideal);
    Saturate => "saturate", [Ideal, Ideal], [], Output::Value(ValueKind::Ideal);
    Eliminate => "eliminate", [Ideal, Vars], [], Output::Eliminated;
    Syz => "syz", [Matrix], [], Output::Value(ValueKind::Matrix);
    Resolve => "resolve", [Module], [Int], Output::Report;
    Ext => "ext", [Int, Module], [], Output::Value(ValueKind::Module);
    Fitting => "fitting", [Int, Module], [], Output::Value(ValueKind::Ideal);
    Rees => "rees", [Ideal], [], Output::Report;
    Fiber => "fiber", [Ideal], [], Output::Report;
    Exceptional => "exceptional", [Ideal], [], Output::Report;
    Chart => "chart", [Ideal, Name], [], Output::Report;
    GradedCompare => "gradedcompare", [Ideal], [Int], Output::Report;
    Hilbert => "hilbert", [Ideal], [], Output::Report;
    Length => "length", [Ideal], [], Output::Report;
    Mult => "mult", [Ideal], [], Output::Report;
    Kernel => "kernel", [Matrix, Module], [], Output::Value(ValueKind::Module);
    SingIdeal => "singideal", [Module], [], Output::Value(ValueKind::Ideal);
    ExtCheck => "extcheck", [Module], [Matrix], Output::Report;
    Pipeline => "pipeline", [Module], [Matrix], Output::Report;
    Discriminant => "discriminant", [Int, Int, Int], [], Output::Report;
    Slope => "slope", [Int, Int], [], Output::Report;
    Screen => "screen", [Int, Int, Int, Int], [], Output::Report;
    Coker => "coker", [Matrix], [], Output::Value(ValueKind::Module);
    Quot => "quot", [Ideal], [], Output::Value(ValueKind::Module);
}

impl Command {
    /// Whether any parameter carries a ring.
    pub fn needs_ring(self) -> bool {
        self.required()
            .iter()
            .chain(self.optional())
            .any(|a| !matches!(a, ArgSpec::Int | ArgSpec::Name))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Call {
    pub command: Command,
    pub args: Vec<Arg>,
    /// Ring shared by all ring-carrying arguments.
    pub ring: Option<RingContext>,
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub enum BindValue {
    Literal(Arg),
    Call(Call),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetOption {
    MaxDegree,
    MaxPairs,
    SatBound,
    SMax,
}

impl SetOption {
    pub fn apply(self, limits: &mut Limits, value: u64) {
        match self {
            SetOption::MaxDegree => limits.max_degree = value.min(u32::MAX as u64) as u32,
            SetOption::MaxPairs => limits.max_pairs = value as usize,
            SetOption::SatBound => limits.sat_bound = value as usize,
            SetOption::SMax => limits.s_max = value as usize,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum StatementKind {
    Ring { name: String, ring: RingContext },
    Use { name: String, ring: RingContext },
    Bind {
        kind: ValueKind,
        name: String,
        ring: RingContext,
        value: BindValue,
    },
    Set { option: SetOption, value: u64 },
    Command(Call),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Statement {
    pub line: usize,
    pub col: usize,
    pub kind: StatementKind,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Script {
    pub statements: Vec<Statement>,
}
