//! C interface to `inireg`. Problems and reports are opaque handles; every
//! fallible call returns an [`IniregStatus`] and leaves a message readable
//! through [`inireg_last_error`] on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use inireg::cli::{self, Command, Options, ProblemFile, Report};
use inireg::sequences::{PipelineConfig, Strategy};
use inireg::Error;

#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IniregStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    UnknownFixture = 4,
    UnitIdeal = 5,
    SizeGuard = 6,
    Defect = 7,
    Unavailable = 8,
    Failed = 9,
    Panic = 10,
}

#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IniregCommand {
    Initial = 0,
    Bound = 1,
    Verify = 2,
    OracleDepth = 3,
    Polarize = 4,
    Report = 5,
}

#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IniregStrategy {
    Greedy = 0,
    Exhaustive = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct IniregOptions {
    pub strategy: IniregStrategy,
    pub restarts: u32,
    pub seed: u64,
    pub relaxed_degrees: bool,
    pub polarize: bool,
    pub oracle: bool,
    pub force: bool,
}

/// Parsed problem file.
pub struct IniregProblem {
    inner: ProblemFile,
    fixture: Option<String>,
}

/// Result of running a command.
pub struct IniregReport {
    inner: Report,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(err: &Error) -> IniregStatus {
    match err {
        Error::Parse(_) => IniregStatus::ParseError,
        Error::UnitIdeal => IniregStatus::UnitIdeal,
        Error::SizeGuard { .. } => IniregStatus::SizeGuard,
        Error::Defect(_) => IniregStatus::Defect,
        _ => IniregStatus::Failed,
    }
}

fn guarded(f: impl FnOnce() -> Result<(), (IniregStatus, String)>) -> IniregStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            IniregStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            IniregStatus::Panic
        }
    }
}

fn lib_err(err: Error) -> (IniregStatus, String) {
    (status_of(&err), err.to_string())
}

/// # Safety
/// `s` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, (IniregStatus, String)> {
    if s.is_null() {
        return Err((IniregStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| (IniregStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

fn null_arg(what: &str) -> (IniregStatus, String) {
    (IniregStatus::NullArgument, format!("{what} is null"))
}

/// The last error message on this thread, or null. The caller owns the
/// returned string and frees it with [`inireg_string_free`].
#[no_mangle]
pub extern "C" fn inireg_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |s| s.clone().into_raw()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn inireg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[no_mangle]
pub extern "C" fn inireg_options_default() -> IniregOptions {
    let d = PipelineConfig::default();
    IniregOptions {
        strategy: IniregStrategy::Greedy,
        restarts: d.restarts as u32,
        seed: d.seed,
        relaxed_degrees: d.relaxed_degrees,
        polarize: false,
        oracle: false,
        force: false,
    }
}

/// Parses a problem file.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn inireg_problem_parse(text: *const c_char, out: *mut *mut IniregProblem) -> IniregStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null_arg("out"));
        }
        let text = read_str(text, "text")?;
        let inner = cli::parse_problem(text).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(IniregProblem { inner, fixture: None }));
        Ok(())
    })
}

/// Loads a shipped example by name.
///
/// # Safety
/// `name` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn inireg_problem_fixture(name: *const c_char, out: *mut *mut IniregProblem) -> IniregStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null_arg("out"));
        }
        let name = read_str(name, "name")?;
        let text = cli::fixture(name)
            .ok_or_else(|| (IniregStatus::UnknownFixture, format!("unknown fixture `{name}`")))?;
        let inner = cli::parse_problem(text).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(IniregProblem {
            inner,
            fixture: Some(name.to_string()),
        }));
        Ok(())
    })
}

/// # Safety
/// `problem` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn inireg_problem_free(problem: *mut IniregProblem) {
    if !problem.is_null() {
        drop(Box::from_raw(problem));
    }
}

/// Runs `command`; `options` may be null for the defaults.
///
/// # Safety
/// `problem` must be a live handle, `options` null or valid, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn inireg_run(
    problem: *const IniregProblem,
    command: IniregCommand,
    options: *const IniregOptions,
    out: *mut *mut IniregReport,
) -> IniregStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null_arg("out"));
        }
        let problem = problem.as_ref().ok_or_else(|| null_arg("problem"))?;
        let o = options.as_ref().copied().unwrap_or_else(|| inireg_options_default());
        let opts = Options {
            pipeline: PipelineConfig {
                strategy: match o.strategy {
                    IniregStrategy::Greedy => Strategy::Greedy,
                    IniregStrategy::Exhaustive => Strategy::Exhaustive,
                },
                restarts: o.restarts as usize,
                seed: o.seed,
                relaxed_degrees: o.relaxed_degrees,
            },
            polarize: o.polarize,
            oracle: o.oracle,
            force: o.force,
        };
        let cmd = match command {
            IniregCommand::Initial => Command::Initial,
            IniregCommand::Bound => Command::Bound,
            IniregCommand::Verify => Command::Verify,
            IniregCommand::OracleDepth => Command::OracleDepth,
            IniregCommand::Polarize => Command::Polarize,
            IniregCommand::Report => Command::Report,
        };
        let inner = cli::run(cmd, &problem.inner, &opts, problem.fixture.as_deref()).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(IniregReport { inner }));
        Ok(())
    })
}

/// # Safety
/// `report` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn inireg_report_free(report: *mut IniregReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

unsafe fn report_field(
    report: *const IniregReport,
    out: *mut u64,
    pick: impl FnOnce(&Report) -> Option<usize>,
    what: &str,
) -> IniregStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null_arg("out"));
        }
        let r = report.as_ref().ok_or_else(|| null_arg("report"))?;
        let v = pick(&r.inner).ok_or_else(|| (IniregStatus::Unavailable, format!("report has no {what}")))?;
        *out = v as u64;
        Ok(())
    })
}

/// Certified lower bound; `Unavailable` if the command produced none.
///
/// # Safety
/// `report` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn inireg_report_bound(report: *const IniregReport, out: *mut u64) -> IniregStatus {
    report_field(report, out, |r| r.bound, "bound")
}

/// # Safety
/// `report` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn inireg_report_oracle_depth(report: *const IniregReport, out: *mut u64) -> IniregStatus {
    report_field(report, out, |r| r.oracle_depth, "oracle depth")
}

/// # Safety
/// `report` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn inireg_report_verified(report: *const IniregReport, out: *mut bool) -> IniregStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null_arg("out"));
        }
        let r = report.as_ref().ok_or_else(|| null_arg("report"))?;
        let v = r
            .inner
            .verified
            .or(r.inner.certificate.as_ref().map(|c| c.verified))
            .ok_or_else(|| (IniregStatus::Unavailable, "report has no certificate".to_string()))?;
        *out = v;
        Ok(())
    })
}

/// The report as JSON (caller frees with [`inireg_string_free`]), or null.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn inireg_report_json(report: *const IniregReport) -> *mut c_char {
    let mut json = ptr::null_mut();
    let status = guarded(|| {
        let r = report.as_ref().ok_or_else(|| null_arg("report"))?;
        let s = r.inner.to_json().map_err(lib_err)?;
        json = CString::new(s).map_err(|e| (IniregStatus::Failed, e.to_string()))?.into_raw();
        Ok(())
    });
    if status == IniregStatus::Ok {
        json
    } else {
        ptr::null_mut()
    }
}
