use altdimap::Error;
use serde_json::{json, Value};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_NOT_WELL_DEFINED: u8 = 2;
pub const EXIT_PRECONDITION: u8 = 3;
pub const EXIT_SELF_CHECK: u8 = 4;

/// What a subcommand produced: a plain-text report, its JSON twin and the
/// exit code.
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub code: u8,
    /// Errors go to stderr.
    pub stderr: bool,
}

impl Outcome {
    pub fn ok(text: impl Into<String>, json: Value) -> Self {
        Outcome {
            text: text.into(),
            json,
            code: EXIT_OK,
            stderr: false,
        }
    }

    pub fn with_code(mut self, code: u8) -> Self {
        self.code = code;
        self
    }
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::AlternationViolation(_)
        | Error::DanglingHalfEdge(_)
        | Error::DuplicateSlot(_)
        | Error::IsolatedVertex(_)
        | Error::OddDegree(_)
        | Error::NonIntegerGenus(_)
        | Error::ProductNotIdentity
        | Error::FormatError(_)
        | Error::IoError(_)
        | Error::UnknownEdge(_) => EXIT_INPUT,
        Error::NotWellDefined { .. } => EXIT_NOT_WELL_DEFINED,
        _ => EXIT_PRECONDITION,
    }
}

pub fn from_error(e: &Error) -> Outcome {
    let mut body = json!({ "error": e.to_string() });
    if let Error::NotWellDefined { first, second } = e {
        body["witnesses"] = json!([first, second]);
    }
    Outcome {
        text: format!("error: {e}\n"),
        json: body,
        code: exit_code(e),
        stderr: true,
    }
}
