use std::path::Path;

use hfw_core::constructions::{
    factor_hyperfield, krasner_hyperfield, sign_hyperfield, PrimeFieldSpec, QSubgroup,
    SubgroupSpec,
};
use hfw_core::hypercore::{FiniteHyperstructure, TableSpec};
use hfw_core::sgntrop::SignedValueHyperfield;
use serde::Deserialize;

/// A structure named on the command line.
#[derive(Clone, Debug)]
pub enum Structure {
    Finite(FiniteHyperstructure),
    Symbolic(SignedValueHyperfield),
    Rational(QSubgroup),
}

impl Structure {
    pub fn name(&self) -> String {
        match self {
            Structure::Finite(h) => h.name().to_string(),
            Structure::Symbolic(f) => f.name(),
            Structure::Rational(t) => t.name(),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum Tagged {
    FactorFp { p: u64, generators: Vec<u64> },
    Builtin { name: String },
    Table(TableSpec),
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum SpecFile {
    Tagged(Tagged),
    Bare(TableSpec),
}

/// Schema or builder errors; reported with exit code 2.
#[derive(Debug)]
pub struct SpecError(pub String);

impl std::fmt::Display for SpecError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

fn err(e: impl ToString) -> SpecError {
    SpecError(e.to_string())
}

/// `sign`, `krasner`, `sgntrop(k)`, `q_squares`, `q_pos`, `q_p_units(p)`,
/// `fp(p)` and `fp_squares(p)`.
pub fn builtin(name: &str) -> Result<Structure, SpecError> {
    let name = name.trim();
    let arg = |prefix: &str| -> Option<Result<u64, SpecError>> {
        let rest = name.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
        Some(rest.trim().parse::<u64>().map_err(|_| err(format!("bad argument in {name}"))))
    };
    let factor = |p: u64, t: SubgroupSpec| -> Result<Structure, SpecError> {
        let field = PrimeFieldSpec::new(p).map_err(err)?;
        Ok(Structure::Finite(factor_hyperfield(field, &t).map_err(err)?.structure))
    };
    match name {
        "sign" => return Ok(Structure::Finite(sign_hyperfield())),
        "krasner" => return Ok(Structure::Finite(krasner_hyperfield())),
        "q_squares" => return Ok(Structure::Rational(QSubgroup::Squares)),
        "q_pos" => return Ok(Structure::Rational(QSubgroup::Positives)),
        _ => {}
    }
    if let Some(k) = arg("sgntrop") {
        let f = SignedValueHyperfield::tropical(k? as usize).map_err(err)?;
        return Ok(Structure::Symbolic(f));
    }
    if let Some(p) = arg("q_p_units") {
        let t = QSubgroup::PositivePUnits(p?).validate().map_err(err)?;
        return Ok(Structure::Rational(t));
    }
    if let Some(p) = arg("fp_squares") {
        let p = p?;
        return factor(p, SubgroupSpec::squares(p));
    }
    if let Some(p) = arg("fp") {
        return factor(p?, SubgroupSpec::new([1]));
    }
    Err(err(format!("unknown structure {name:?}")))
}

pub fn parse(text: &str) -> Result<Structure, SpecError> {
    let spec: SpecFile = serde_json::from_str(text).map_err(|e| err(format!("schema: {e}")))?;
    match spec {
        SpecFile::Tagged(Tagged::FactorFp { p, generators }) => {
            let field = PrimeFieldSpec::new(p).map_err(err)?;
            let f = factor_hyperfield(field, &SubgroupSpec::new(generators)).map_err(err)?;
            Ok(Structure::Finite(f.structure))
        }
        SpecFile::Tagged(Tagged::Builtin { name }) => builtin(&name),
        SpecFile::Tagged(Tagged::Table(t)) | SpecFile::Bare(t) => {
            Ok(Structure::Finite(t.build().map_err(err)?))
        }
    }
}

/// Reads a spec file, or treats the argument as a builtin shorthand when no
/// such file exists. Returns the structure and the bytes that identify it.
pub fn load(arg: &str) -> Result<(Structure, Vec<u8>), SpecError> {
    let path = Path::new(arg);
    if path.is_file() {
        let bytes = std::fs::read(path).map_err(|e| err(format!("{arg}: {e}")))?;
        let text = std::str::from_utf8(&bytes).map_err(|e| err(format!("{arg}: {e}")))?;
        Ok((parse(text)?, bytes))
    } else {
        Ok((builtin(arg)?, arg.as_bytes().to_vec()))
    }
}
