//! Reading graphs from graph6 lines or edge-list files.

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;

use kekule_core::{parse_edge_list, parse_graph6, Graph};

/// One input graph, or the reason it could not be read.
pub struct Item {
    /// The graph6 line as given, or the edge-list file path.
    pub label: String,
    pub graph: Result<Graph, String>,
}

/// Reads every input. Without paths, reads stdin. Blank lines are skipped.
pub fn read_inputs(paths: &[PathBuf], edge_list: bool) -> io::Result<Vec<Item>> {
    let mut items = Vec::new();
    if edge_list {
        if paths.is_empty() {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text)?;
            items.push(edge_list_item("-".into(), &text));
        }
        for p in paths {
            let text = fs::read_to_string(p)?;
            items.push(edge_list_item(p.display().to_string(), &text));
        }
        return Ok(items);
    }
    let mut texts = Vec::new();
    if paths.is_empty() {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        texts.push(text);
    }
    for p in paths {
        texts.push(fs::read_to_string(p)?);
    }
    for text in &texts {
        for line in text.lines() {
            let line = line.trim_end_matches('\r');
            if line.trim().is_empty() {
                continue;
            }
            items.push(Item {
                label: line.to_string(),
                graph: parse_graph6(line).map_err(|e| e.to_string()),
            });
        }
    }
    Ok(items)
}

fn edge_list_item(label: String, text: &str) -> Item {
    Item {
        label,
        graph: parse_edge_list(text).map_err(|e| e.to_string()),
    }
}
