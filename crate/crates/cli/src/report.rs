use std::fmt::Write as _;
use std::path::Path;

/// A report: `key value` lines, each with a sentence for `--pretty`.
#[derive(Debug, Default)]
pub struct Report {
    lines: Vec<(String, String, String)>,
    code: u8,
}

/// A failed command with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub msg: String,
}

impl Failure {
    pub fn input(msg: impl Into<String>) -> Self {
        Failure { code: 2, msg: msg.into() }
    }

    pub fn mismatch(msg: impl Into<String>) -> Self {
        Failure { code: 3, msg: msg.into() }
    }
}

impl From<mimfvs::Error> for Failure {
    fn from(e: mimfvs::Error) -> Self {
        use mimfvs::Error as E;
        match e {
            E::InvalidDecomposition(_) | E::ParameterTooSmall(_) | E::TableBound { .. } => {
                Failure::mismatch(e.to_string())
            }
            _ => Failure::input(e.to_string()),
        }
    }
}

pub fn list(vs: impl IntoIterator<Item = usize>) -> String {
    let mut s = String::new();
    for v in vs {
        if !s.is_empty() {
            s.push(' ');
        }
        let _ = write!(s, "{v}");
    }
    s
}

impl Report {
    pub fn add(&mut self, key: &str, value: impl ToString, prose: impl Into<String>) {
        self.lines.push((key.to_string(), value.to_string(), prose.into()));
    }

    pub fn fail_with(&mut self, code: u8) {
        self.code = code;
    }

    pub fn exit_code(&self) -> u8 {
        self.code
    }

    pub fn render(&self, pretty: bool) -> String {
        let mut s = String::new();
        for (k, v, p) in &self.lines {
            if pretty {
                let _ = writeln!(s, "{p}");
            } else if v.is_empty() {
                let _ = writeln!(s, "{k}");
            } else {
                let _ = writeln!(s, "{k} {v}");
            }
        }
        s
    }

    pub fn emit(&self, pretty: bool, out: Option<&Path>) -> std::io::Result<()> {
        let text = self.render(pretty);
        print!("{text}");
        if let Some(p) = out {
            std::fs::write(p, text)?;
        }
        Ok(())
    }
}
