use std::fs;
use std::path::Path;

use cliquetree::graph_core::io::{format_edge_list, parse_edge_list};
use cliquetree::graph_core::CliqueTreeRecipe;
use cliquetree::Graph;
use serde::Serialize;
use serde_json::Value;

use crate::config::Format;
use crate::error::{CliError, CliResult};

/// Reads an edge list, or a clique-tree recipe when the file ends in `.json`.
pub fn load_graph(path: &Path) -> CliResult<Graph> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let load_err = |msg: String| CliError::Load {
        path: path.to_path_buf(),
        msg,
    };
    if path.extension().is_some_and(|e| e == "json") {
        let recipe: CliqueTreeRecipe = serde_json::from_str(&text).map_err(|e| load_err(e.to_string()))?;
        Ok(recipe.build().map_err(|e| load_err(e.to_string()))?.0)
    } else {
        parse_edge_list(&text).map_err(|e| load_err(e.to_string()))
    }
}

pub fn save_graph(g: &Graph, path: &Path) -> CliResult<()> {
    write_file(path, &format_edge_list(g))
}

pub fn save_report<T: Serialize>(report: &T, path: &Path) -> CliResult<()> {
    let mut text = serde_json::to_string_pretty(report).expect("reports serialize");
    text.push('\n');
    write_file(path, &text)
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    }
    fs::write(path, text).map_err(|e| CliError::io(path, e))
}

/// Renders `value` on stdout. CSV output turns an array of objects into one
/// row per element and anything else into a single row; nested values are
/// written as JSON inside the cell.
pub fn emit<T: Serialize>(value: &T, format: Format) -> CliResult<()> {
    let value = serde_json::to_value(value).expect("outputs serialize");
    match format {
        Format::Json => println!("{value}"),
        Format::Csv => print!("{}", to_csv(&value)?),
    }
    Ok(())
}

pub fn to_csv(value: &Value) -> CliResult<String> {
    let rows: Vec<&Value> = match value {
        Value::Array(items) => items.iter().collect(),
        other => vec![other],
    };
    let mut header: Vec<String> = Vec::new();
    for row in &rows {
        if let Value::Object(map) = row {
            for k in map.keys() {
                if !header.contains(k) {
                    header.push(k.clone());
                }
            }
        }
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    if header.is_empty() {
        for row in rows {
            w.write_record([cell(row)])?;
        }
    } else {
        w.write_record(&header)?;
        for row in rows {
            w.write_record(header.iter().map(|k| row.get(k).map_or(String::new(), cell)))?;
        }
    }
    Ok(String::from_utf8(w.into_inner().expect("in-memory writer")).expect("csv is utf-8"))
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}
