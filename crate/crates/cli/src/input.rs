use std::fs;
use std::io::Read;

use quandlekit::diagram::{builtin, parse_pd, Builtin, LinkDiagram};
use quandlekit::quandle::{make_conj, make_dihedral, make_eisermann, make_trivial, FiniteGroup, FiniteQuandle};
use serde::Deserialize;

use crate::CliError;

/// Reads a diagram from a builtin name, a PD file, or stdin (`-` or nothing).
pub fn read_diagram(builtin_name: Option<&str>, path: Option<&str>) -> Result<(String, LinkDiagram), CliError> {
    if let Some(name) = builtin_name {
        if path.is_some() {
            return Err(CliError::Input("give either --builtin or an input file, not both".into()));
        }
        let b: Builtin = name.parse().map_err(CliError::Input)?;
        return Ok((b.name().to_string(), builtin(b)));
    }
    let (label, text) = match path {
        Some(p) if p != "-" => {
            (p.to_string(), fs::read_to_string(p).map_err(|e| CliError::Input(format!("cannot read {p}: {e}")))?)
        }
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::Input(format!("cannot read stdin: {e}")))?;
            ("stdin".to_string(), s)
        }
    };
    let d = parse_pd(&text).map_err(|e| CliError::Input(format!("{label}: {e}")))?;
    Ok((label, d))
}

#[derive(Deserialize)]
struct GroupFile {
    table: Vec<Vec<usize>>,
    subset: Option<Vec<usize>>,
}

fn parse_usize(s: &str, what: &str) -> Result<usize, CliError> {
    s.trim().parse().map_err(|_| CliError::Input(format!("bad {what} `{s}` in quandle spec")))
}

/// `trivial:n | dihedral:n | eisermann:m,n | conj:<groupfile>:k`
pub fn parse_quandle(spec: &str) -> Result<FiniteQuandle, CliError> {
    let bad = |why: String| CliError::Input(format!("quandle spec `{spec}`: {why}"));
    let (kind, rest) = spec.split_once(':').ok_or_else(|| bad("expected kind:parameters".into()))?;
    match kind {
        "trivial" => {
            let n = parse_usize(rest, "size")?;
            if n == 0 {
                return Err(bad("size must be positive".into()));
            }
            Ok(make_trivial(n))
        }
        "dihedral" => {
            let n = parse_usize(rest, "order")?;
            if n == 0 {
                return Err(bad("order must be positive".into()));
            }
            Ok(make_dihedral(n))
        }
        "eisermann" => {
            let (m, n) = rest.split_once(',').ok_or_else(|| bad("expected eisermann:m,n".into()))?;
            make_eisermann(parse_usize(m, "m")?, parse_usize(n, "n")?).map_err(|e| bad(e.to_string()))
        }
        "conj" => {
            let (path, k) = rest.rsplit_once(':').ok_or_else(|| bad("expected conj:<groupfile>:k".into()))?;
            let k: i64 = k.trim().parse().map_err(|_| bad(format!("bad power `{k}`")))?;
            let text = fs::read_to_string(path).map_err(|e| bad(format!("cannot read {path}: {e}")))?;
            let file: GroupFile = serde_json::from_str(&text).map_err(|e| bad(format!("{path}: {e}")))?;
            let g = FiniteGroup::from_table(file.table).map_err(|e| bad(e.to_string()))?;
            let subset = file.subset.unwrap_or_else(|| (0..g.order()).collect());
            make_conj(&g, &subset, k).map_err(|e| bad(e.to_string()))
        }
        _ => Err(bad(format!("unknown kind `{kind}`"))),
    }
}
