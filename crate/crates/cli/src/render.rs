use std::fmt::Write as _;
use std::io::Write as _;

use serde_json::Value;

use crate::commands::{CommandResult, Status};
use crate::{Cli, Format};

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Inconclusive => "INCONCLUSIVE",
        Status::Error => "ERROR",
    }
}

/// Compact rendering: integer arrays as tuples, everything else as JSON.
fn compact(v: &Value) -> String {
    match v {
        Value::Array(items) if items.iter().all(Value::is_number) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            format!("({})", parts.join(","))
        }
        Value::Array(items) if items.iter().all(|i| matches!(i, Value::Array(_))) => {
            let parts: Vec<String> = items.iter().map(compact).collect();
            format!("[{}]", parts.join(" "))
        }
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn text(result: &CommandResult) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}: {}", result.command, status_word(result.status));
    if let Some(rows) = result.payload.get("certificates").and_then(Value::as_array) {
        for row in rows {
            let ok = row["ok"].as_bool().unwrap_or(false);
            let _ = writeln!(
                out,
                "  [{}] {:<36} {}",
                if ok { "ok" } else { "!!" },
                row["check"].as_str().unwrap_or(""),
                row["detail"].as_str().unwrap_or("")
            );
        }
    }
    if let (Some(betti), Some(p)) = (result.payload.get("betti"), result.payload.get("p")) {
        let _ = writeln!(out, "  {:>6}  {:>6}   (over F_{p})", "degree", "betti");
        for (i, b) in betti.as_array().into_iter().flatten().enumerate() {
            let _ = writeln!(out, "  {:>6}  {:>6}", i as i64 - 1, b.to_string());
        }
    }
    if let Value::Object(map) = &result.payload {
        let width = map.keys().map(String::len).max().unwrap_or(0);
        for (k, v) in map {
            if matches!(k.as_str(), "certificates" | "betti" | "restriction_faces") {
                continue;
            }
            let _ = writeln!(out, "  {k:<width$}  {}", compact(v));
        }
    }
    for d in &result.diagnostics {
        let _ = writeln!(out, "  note: {d}");
    }
    out
}

pub fn emit(cli: &Cli, result: &CommandResult) -> std::io::Result<()> {
    let artifact = result.artifact.as_ref().map(|l| match cli.format {
        Format::Text => l.to_text(),
        Format::Json => {
            serde_json::to_string_pretty(&l.to_json()).expect("listing serializes") + "\n"
        }
    });
    let mut stdout = std::io::stdout().lock();
    match cli.format {
        Format::Json => {
            let mut value = serde_json::to_value(result).expect("result serializes");
            if let (Some(listing), None) = (&result.artifact, &cli.out) {
                value["payload"]["listing"] =
                    serde_json::to_value(listing.to_json()).expect("listing serializes");
            }
            writeln!(
                stdout,
                "{}",
                serde_json::to_string_pretty(&value).expect("json")
            )?;
        }
        Format::Text => {
            stdout.write_all(text(result).as_bytes())?;
            if let (Some(a), None) = (&artifact, &cli.out) {
                writeln!(stdout)?;
                stdout.write_all(a.as_bytes())?;
            }
        }
    }
    if let (Some(a), Some(path)) = (artifact, &cli.out) {
        std::fs::write(path, a)?;
    }
    Ok(())
}
