use std::path::PathBuf;
use std::time::Duration;

use serde_json::{json, Value};

use crate::outcome::Outcome;
use crate::{Cli, Format};

/// Environment variable naming the directory results go to when --output is absent.
pub const OUT_DIR_ENV: &str = "PROJRING_OUT_DIR";

pub fn render(cli: &Cli, name: &str, outcome: &Outcome, elapsed: Option<Duration>) -> Result<String, String> {
    match cli.format {
        Format::Json => {
            let mut env = json!({
                "schema_version": projring::SCHEMA_VERSION,
                "command": name,
                "seed": cli.seed,
                "passed": outcome.passed(),
                "checks": outcome.checks,
                "report": outcome.report,
            });
            if let Some(d) = elapsed {
                env["elapsed_ms"] = Value::from(d.as_millis() as u64);
            }
            serde_json::to_string_pretty(&env).map(|s| s + "\n").map_err(|e| e.to_string())
        }
        Format::Text => {
            let mut s = outcome.text.clone();
            if !s.is_empty() && !outcome.checks.is_empty() {
                s.push('\n');
            }
            for c in &outcome.checks {
                let mark = if c.passed { "PASS" } else { "FAIL" };
                match &c.detail {
                    Some(d) => s.push_str(&format!("{mark}  {}  ({d})\n", c.name)),
                    None => s.push_str(&format!("{mark}  {}\n", c.name)),
                }
            }
            s.push_str(if outcome.passed() { "all checks passed\n" } else { "some checks FAILED\n" });
            if let Some(d) = elapsed {
                s.push_str(&format!("elapsed {:.3} s\n", d.as_secs_f64()));
            }
            Ok(s)
        }
        Format::Csv => {
            let default_rows;
            let rows = match &outcome.csv {
                Some(rows) => rows,
                None => {
                    let mut rows = vec![vec!["check".to_string(), "passed".to_string(), "detail".to_string()]];
                    for c in &outcome.checks {
                        rows.push(vec![c.name.clone(), c.passed.to_string(), c.detail.clone().unwrap_or_default()]);
                    }
                    default_rows = rows;
                    &default_rows
                }
            };
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in rows {
                w.write_record(r).map_err(|e| e.to_string())?;
            }
            let bytes = w.into_inner().map_err(|e| e.to_string())?;
            String::from_utf8(bytes).map_err(|e| e.to_string())
        }
    }
}

pub fn failure(name: &str, error: &str) -> String {
    let v = json!({
        "schema_version": projring::SCHEMA_VERSION,
        "command": name,
        "passed": false,
        "error": error,
    });
    serde_json::to_string_pretty(&v).expect("plain JSON") + "\n"
}

fn extension(f: Format) -> &'static str {
    match f {
        Format::Json => "json",
        Format::Csv => "csv",
        Format::Text => "txt",
    }
}

fn default_path(cli: &Cli, name: &str) -> Option<PathBuf> {
    let dir = std::env::var_os(OUT_DIR_ENV)?;
    let mut stem: String = name.chars().map(|c| if c.is_ascii_alphanumeric() || c == '.' { c } else { '-' }).collect();
    if let Some(f) = cli.family {
        stem.push_str(&format!("-{f}"));
    }
    stem.push_str(&format!("-n{}", cli.n));
    Some(PathBuf::from(dir).join(format!("{stem}.{}", extension(cli.format))))
}

/// Writes to --output, else into the directory named by the environment, else stdout.
pub fn emit(cli: &Cli, name: &str, rendered: &str) -> std::io::Result<()> {
    match cli.output.clone().or_else(|| default_path(cli, name)) {
        Some(path) => {
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                std::fs::create_dir_all(parent)?;
            }
            std::fs::write(&path, rendered)?;
            eprintln!("wrote {}", path.display());
            Ok(())
        }
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}
