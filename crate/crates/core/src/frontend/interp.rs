use std::collections::HashMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::ast::*;
use super::diagnostic::Diagnostic;
use super::eval::eval_poly;
use super::parser::{ParseOptions, Parser};
use crate::blowup::{self, FiberReport, GradedPresentation, GradedRow};
use crate::error::{AlgebraError, Result};
use crate::groebner::Ideal;
use crate::hilbert::{self, HilbertData, Length};
use crate::limits::Limits;
use crate::modmat::{self, FreeResolution, ModulePresentation, PolyMatrix};
use crate::pipeline::{self, DegenerateFiber, ExtIdentityReport, NumericInvariants, ScreenVerdict, SingularityDatum};
use crate::poly::{MonomialOrder, Polynomial, RingContext};

/// A command result.
#[derive(Clone, Debug)]
pub enum Value {
    Poly(Polynomial),
    Ideal(Ideal),
    Matrix(PolyMatrix),
    Module(ModulePresentation),
    Bool(bool),
    Int(BigInt),
    Rational(BigRational),
    Length(Length),
    Resolution(FreeResolution),
    Hilbert(HilbertData),
    Rees(GradedPresentation),
    Fiber(Box<FiberReport>),
    Chart(blowup::Chart),
    Graded(Vec<GradedRow>),
    ExtCheck(Box<ExtIdentityReport>),
    Pipeline(Box<DegenerateFiber>),
    Verdict(ScreenVerdict),
}

#[derive(Clone, Debug)]
pub struct ExecOptions {
    pub limits: Limits,
    pub fail_fast: bool,
    /// Recorded in the document; the engine itself is deterministic.
    pub seed: Option<u64>,
    pub default_order: MonomialOrder,
}

impl Default for ExecOptions {
    fn default() -> Self {
        ExecOptions {
            limits: Limits::default(),
            fail_fast: false,
            seed: None,
            default_order: MonomialOrder::GrevLex,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Entry {
    /// `NNNN:command`, numbered from 1 in execution order.
    pub key: String,
    pub command: String,
    /// Name bound by the statement, if any.
    pub binding: Option<String>,
    pub line: usize,
    pub outcome: std::result::Result<Value, String>,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct ResultDocument {
    pub options: ExecOptions,
    pub entries: Vec<Entry>,
    /// Set when `fail_fast` stopped execution early.
    pub aborted: bool,
}

impl ResultDocument {
    pub fn new(options: ExecOptions) -> Self {
        ResultDocument {
            options,
            entries: Vec::new(),
            aborted: false,
        }
    }

    pub fn has_errors(&self) -> bool {
        self.entries.iter().any(|e| e.outcome.is_err())
    }
}

#[derive(Clone, Debug)]
enum Bound {
    Ok(Value),
    Failed,
}

/// Statement evaluator with its environment.
#[derive(Clone, Debug)]
pub struct Interpreter {
    limits: Limits,
    fail_fast: bool,
    env: HashMap<String, Bound>,
    counter: usize,
}

impl Interpreter {
    pub fn new(options: &ExecOptions) -> Self {
        Interpreter {
            limits: options.limits,
            fail_fast: options.fail_fast,
            env: HashMap::new(),
            counter: 0,
        }
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    /// Runs `script`, appending entries to `doc`. Returns false if execution
    /// stopped on an error under `fail_fast`.
    pub fn run(&mut self, script: &Script, doc: &mut ResultDocument) -> bool {
        for st in &script.statements {
            if let Some(entry) = self.statement(st) {
                let failed = entry.outcome.is_err();
                doc.entries.push(entry);
                if failed && self.fail_fast {
                    doc.aborted = true;
                    return false;
                }
            }
        }
        true
    }

    fn entry(&mut self, command: &str, binding: Option<String>, line: usize, outcome: Result<Value>, elapsed: Duration) -> Entry {
        self.counter += 1;
        Entry {
            key: format!("{:04}:{command}", self.counter),
            command: command.to_string(),
            binding,
            line,
            outcome: outcome.map_err(|e| e.to_string()),
            elapsed,
        }
    }

    fn statement(&mut self, st: &Statement) -> Option<Entry> {
        match &st.kind {
            StatementKind::Ring { .. } | StatementKind::Use { .. } => None,
            StatementKind::Set { option, value } => {
                option.apply(&mut self.limits, *value);
                None
            }
            StatementKind::Command(call) => {
                let start = Instant::now();
                let out = self.call(call);
                Some(self.entry(call.command.name(), None, st.line, out, start.elapsed()))
            }
            StatementKind::Bind { name, ring, value, kind } => {
                let start = Instant::now();
                let (command, out) = match value {
                    BindValue::Call(call) => (Some(call.command.name()), self.call(call)),
                    BindValue::Literal(arg) => (None, self.literal(*kind, arg, ring)),
                };
                match (&out, command) {
                    (Ok(v), None) => {
                        self.env.insert(name.clone(), Bound::Ok(v.clone()));
                        None
                    }
                    (Ok(v), Some(_)) => {
                        self.env.insert(name.clone(), Bound::Ok(v.clone()));
                        Some(self.entry(command.unwrap(), Some(name.clone()), st.line, out, start.elapsed()))
                    }
                    (Err(_), _) => {
                        self.env.insert(name.clone(), Bound::Failed);
                        Some(self.entry(command.unwrap_or("bind"), Some(name.clone()), st.line, out, start.elapsed()))
                    }
                }
            }
        }
    }

    fn lookup(&self, name: &str) -> Result<&Value> {
        match self.env.get(name) {
            Some(Bound::Ok(v)) => Ok(v),
            Some(Bound::Failed) => Err(AlgebraError::InvalidArgument(format!("`{name}` is unavailable: its definition failed"))),
            None => Err(AlgebraError::InvalidArgument(format!("`{name}` is not bound"))),
        }
    }

    fn poly(&self, e: &PolyExpr, ring: &RingContext) -> Result<Polynomial> {
        let lookup = |n: &str| match self.env.get(n) {
            Some(Bound::Ok(Value::Poly(p))) => Some(p.clone()),
            _ => None,
        };
        eval_poly(e, ring, &lookup, &self.limits).map_err(|err| match self.env.get(first_ref(e).unwrap_or("")) {
            Some(Bound::Failed) => AlgebraError::InvalidArgument(format!(
                "`{}` is unavailable: its definition failed",
                first_ref(e).unwrap_or("")
            )),
            _ => err,
        })
    }

    fn literal(&self, kind: ValueKind, arg: &Arg, ring: &RingContext) -> Result<Value> {
        Ok(match kind {
            ValueKind::Poly => match arg {
                Arg::Poly(e) => Value::Poly(self.poly(e, ring)?),
                _ => unreachable!("poly bindings take expressions"),
            },
            ValueKind::Ideal => Value::Ideal(self.ideal(arg, ring)?),
            ValueKind::Matrix => Value::Matrix(self.matrix(arg, ring)?),
            ValueKind::Module => Value::Module(self.module(arg)?),
        })
    }

    fn ideal(&self, arg: &Arg, ring: &RingContext) -> Result<Ideal> {
        match arg {
            Arg::IdealLit(gens) => {
                let g = gens.iter().map(|e| self.poly(e, ring)).collect::<Result<Vec<_>>>()?;
                Ideal::new(ring, g)
            }
            Arg::Ref(n) => match self.lookup(n)? {
                Value::Ideal(i) => Ok(i.clone()),
                _ => Err(AlgebraError::InvalidArgument(format!("`{n}` is not an ideal"))),
            },
            _ => unreachable!("ideal argument"),
        }
    }

    fn matrix(&self, arg: &Arg, ring: &RingContext) -> Result<PolyMatrix> {
        match arg {
            Arg::MatrixLit(rows) => {
                let rows = rows
                    .iter()
                    .map(|r| r.iter().map(|e| self.poly(e, ring)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                if rows.is_empty() {
                    return Ok(PolyMatrix::zeros(ring, 0, 0));
                }
                PolyMatrix::from_rows(ring, rows)
            }
            Arg::Ref(n) => match self.lookup(n)? {
                Value::Matrix(m) => Ok(m.clone()),
                _ => Err(AlgebraError::InvalidArgument(format!("`{n}` is not a matrix"))),
            },
            _ => unreachable!("matrix argument"),
        }
    }

    fn module(&self, arg: &Arg) -> Result<ModulePresentation> {
        match arg {
            Arg::Ref(n) => match self.lookup(n)? {
                Value::Module(m) => Ok(m.clone()),
                _ => Err(AlgebraError::InvalidArgument(format!("`{n}` is not a module"))),
            },
            _ => unreachable!("module argument"),
        }
    }

    fn datum(&self, args: &[Arg], ring: &RingContext) -> Result<SingularityDatum> {
        let kappa = self.module(&args[0])?;
        let q = match args.get(1) {
            Some(a) => self.matrix(a, ring)?,
            None if kappa.rank0() == 0 || kappa.is_zero(&self.limits)? => {
                return SingularityDatum::zero(ring, 1, &self.limits);
            }
            None => PolyMatrix::identity(ring, kappa.rank0()),
        };
        if q.rows() == 0 && kappa.rank0() == 0 {
            return SingularityDatum::zero(ring, q.cols().max(1), &self.limits);
        }
        SingularityDatum::new(kappa, q, &self.limits)
    }

    fn call(&self, call: &Call) -> Result<Value> {
        let l = &self.limits;
        let a = &call.args;
        let int = |k: usize| match &a[k] {
            Arg::Int(v) => *v,
            _ => unreachable!("integer argument"),
        };
        let nonneg = |k: usize| -> Result<u64> {
            u64::try_from(int(k)).map_err(|_| AlgebraError::InvalidArgument(format!("argument {} must be nonnegative", k + 1)))
        };
        let small = |k: usize| -> Result<u32> {
            u32::try_from(nonneg(k)?).map_err(|_| AlgebraError::InvalidArgument(format!("argument {} is too large", k + 1)))
        };
        if !call.command.needs_ring() {
            return numeric(call.command, &|k| int(k));
        }
        let ring = call.ring.as_ref().expect("ring-carrying command");
        let ideal = |k: usize| self.ideal(&a[k], ring);
        let poly = |k: usize| match &a[k] {
            Arg::Poly(e) => self.poly(e, ring),
            _ => unreachable!("poly argument"),
        };
        Ok(match call.command {
            Command::Groebner => Value::Ideal(ideal(0)?.normalized(l)?),
            Command::Nf => Value::Poly(ideal(1)?.reduce(&poly(0)?, l)?),
            Command::Member => Value::Bool(ideal(1)?.contains(&poly(0)?, l)?),
            Command::RadMember => Value::Bool(ideal(1)?.radical_contains(&poly(0)?, l)?),
            Command::Power => {
                let s = small(1)?;
                let i = ideal(0)?;
                let deg = i.generators().iter().filter_map(|g| g.total_degree()).max().unwrap_or(0);
                if deg.saturating_mul(s as u64) > l.max_degree as u64 {
                    return Err(AlgebraError::ResourceLimit(format!("power degree exceeds max degree {}", l.max_degree)));
                }
                Value::Ideal(i.power(s)?)
            }
            Command::Intersect => Value::Ideal(ideal(0)?.intersect(&ideal(1)?, l)?.normalized(l)?),
            Command::Quotient => Value::Ideal(ideal(0)?.quotient(&ideal(1)?, l)?.normalized(l)?),
            Command::Saturate => Value::Ideal(ideal(0)?.saturate(&ideal(1)?, l)?.normalized(l)?),
            Command::Eliminate => {
                let vars = match &a[1] {
                    Arg::Vars(v) => v,
                    _ => unreachable!("variable set"),
                };
                Value::Ideal(ideal(0)?.eliminate(vars, l)?.normalized(l)?)
            }
            Command::Syz => Value::Matrix(modmat::syzygies(&self.matrix(&a[0], ring)?, l)?),
            Command::Resolve => {
                let len = if a.len() > 1 { nonneg(1)? as usize } else { ring.nvars() + 1 };
                Value::Resolution(modmat::free_resolution(&self.module(&a[0])?, len, l)?)
            }
            Command::Ext => Value::Module(modmat::ext_module(nonneg(0)? as usize, &self.module(&a[1])?, l)?),
            Command::Fitting => {
                Value::Ideal(modmat::fitting_ideal(nonneg(0)? as usize, &self.module(&a[1])?)?.normalized(l)?)
            }
            Command::Rees => Value::Rees(blowup::rees_presentation(&ideal(0)?, l)?),
            Command::Fiber => Value::Fiber(Box::new(blowup::special_fiber(&ideal(0)?, l)?)),
            Command::Exceptional => {
                let i = ideal(0)?;
                let g = blowup::rees_presentation(&i, l)?;
                Value::Ideal(blowup::exceptional_divisor(&g, &i)?.normalized(l)?)
            }
            Command::Chart => {
                let var = match &a[1] {
                    Arg::Name(n) => n,
                    _ => unreachable!("name argument"),
                };
                Value::Chart(blowup::rees_presentation(&ideal(0)?, l)?.chart(var, l)?)
            }
            Command::GradedCompare => {
                let s = if a.len() > 1 { small(1)? } else { l.s_max as u32 };
                Value::Graded(blowup::graded_piece_compare(&ideal(0)?, s, l)?)
            }
            Command::Hilbert => Value::Hilbert(hilbert::hilbert_data(&ideal(0)?, l)?),
            Command::Length => Value::Length(hilbert::artinian_length(&ideal(0)?, l)?),
            Command::Mult => Value::Int(hilbert::hilbert_samuel_multiplicity(&ideal(0)?, l)?.into()),
            Command::Kernel => Value::Module(modmat::kernel_presentation(
                &self.matrix(&a[0], ring)?,
                &self.module(&a[1])?,
                l,
            )?),
            Command::SingIdeal => Value::Ideal(pipeline::singularity_ideal(&self.datum(a, ring)?, l)?),
            Command::ExtCheck => Value::ExtCheck(Box::new(pipeline::ext_identity_check(&self.datum(a, ring)?, l)?)),
            Command::Pipeline => Value::Pipeline(Box::new(pipeline::degenerate_fiber(&self.datum(a, ring)?, l)?)),
            Command::Coker => Value::Module(ModulePresentation::new(self.matrix(&a[0], ring)?)),
            Command::Quot => Value::Module(ModulePresentation::cyclic(&ideal(0)?)),
            Command::Discriminant | Command::Slope | Command::Screen => unreachable!("numeric commands"),
        })
    }
}

fn first_ref(e: &PolyExpr) -> Option<&str> {
    match e {
        PolyExpr::Ref(n) => Some(n),
        PolyExpr::Add(a, b) | PolyExpr::Sub(a, b) | PolyExpr::Mul(a, b) => first_ref(a).or_else(|| first_ref(b)),
        PolyExpr::Neg(a) | PolyExpr::Pow(a, _) => first_ref(a),
        PolyExpr::Const(_) | PolyExpr::Var(_) => None,
    }
}

fn numeric(cmd: Command, int: &dyn Fn(usize) -> i64) -> Result<Value> {
    Ok(match cmd {
        Command::Discriminant => {
            let n = NumericInvariants::new(int(0), int(1), 0, int(2))?;
            Value::Int(pipeline::bogomolov_discriminant(&n))
        }
        Command::Slope => Value::Rational(pipeline::slope(&NumericInvariants::new(int(0), 0, int(1), 0)?)),
        Command::Screen => {
            let n = NumericInvariants::new(int(0), int(1), 0, int(2))?;
            let l = u64::try_from(int(3)).map_err(|_| AlgebraError::InvalidArgument("length must be nonnegative".into()))?;
            Value::Verdict(pipeline::admissibility_screen(&n, l))
        }
        _ => unreachable!("ring-free commands"),
    })
}

/// Runs a parsed script from an empty environment.
pub fn execute(script: &Script, options: &ExecOptions) -> ResultDocument {
    let mut doc = ResultDocument::new(options.clone());
    Interpreter::new(options).run(script, &mut doc);
    doc
}

/// Outcome of feeding one line to a [`Session`].
#[derive(Debug)]
pub enum Feed {
    /// The buffered input does not end a statement yet.
    Incomplete,
    Parsed(ResultDocument),
    Error(Diagnostic),
}

/// Interactive state: parser symbols, interpreter environment and a line
/// buffer that is flushed at each `;`.
#[derive(Clone, Debug)]
pub struct Session {
    parser: Parser,
    interp: Interpreter,
    options: ExecOptions,
    buffer: String,
}

impl Session {
    pub fn new(options: ExecOptions) -> Self {
        Session {
            parser: Parser::new(ParseOptions {
                default_order: options.default_order.clone(),
            }),
            interp: Interpreter::new(&options),
            options,
            buffer: String::new(),
        }
    }

    pub fn is_pending(&self) -> bool {
        !self.buffer.trim().is_empty()
    }

    pub fn feed(&mut self, line: &str) -> Feed {
        self.buffer.push_str(line);
        self.buffer.push('\n');
        let code = strip_comments(&self.buffer);
        if !code.trim_end().ends_with(';') {
            if code.trim().is_empty() {
                self.buffer.clear();
            }
            return Feed::Incomplete;
        }
        let text = std::mem::take(&mut self.buffer);
        match self.parser.parse(&text) {
            Ok(script) => {
                let mut doc = ResultDocument::new(self.options.clone());
                let fail_fast = self.interp.fail_fast;
                self.interp.fail_fast = false;
                self.interp.run(&script, &mut doc);
                self.interp.fail_fast = fail_fast;
                Feed::Parsed(doc)
            }
            Err(d) => Feed::Error(d),
        }
    }
}

fn strip_comments(s: &str) -> String {
    s.lines()
        .map(|l| l.split("//").next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join("\n")
}
