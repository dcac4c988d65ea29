//! Deterministic table emission in csv, json, and latex.

use clap::ValueEnum;
use serde_json::json;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Latex,
}

pub struct Table {
    command: String,
    columns: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(command: &str, columns: &[&str]) -> Self {
        Self {
            command: command.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn emit(&self, format: Format) {
        match format {
            Format::Csv => self.emit_csv(),
            Format::Json => self.emit_json(),
            Format::Latex => self.emit_latex(),
        }
    }

    fn emit_csv(&self) {
        println!(
            "# {} v{} {}",
            super::TOOL,
            super::VERSION,
            self.command
        );
        println!("{}", self.columns.join(","));
        for row in &self.rows {
            println!("{}", row.join(","));
        }
    }

    fn emit_json(&self) {
        let doc = json!({
            "meta": {
                "tool": super::TOOL,
                "version": super::VERSION,
                "command": self.command,
            },
            "columns": self.columns,
            "rows": self.rows,
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("static shape"));
    }

    fn emit_latex(&self) {
        println!("% {} v{} {}", super::TOOL, super::VERSION, self.command);
        let spec = "r".repeat(self.columns.len());
        println!("\\begin{{tabular}}{{{spec}}}");
        let header: Vec<String> = self
            .columns
            .iter()
            .map(|c| latex_column(&self.command, c))
            .collect();
        println!("{} \\\\", header.join(" & "));
        println!("\\hline");
        for row in &self.rows {
            println!("{} \\\\", row.join(" & "));
        }
        println!("\\end{{tabular}}");
    }
}

/// Column headers in the classical bracket notations where one exists.
fn latex_column(command: &str, column: &str) -> String {
    if column != "value" && column != "gamma" {
        return format!("${column}$");
    }
    match command {
        "stirling --kind first" => "${n \\brack m}$".to_string(),
        "stirling --kind second" => "${n \\brace m}$".to_string(),
        "eulerian" => "$\\left\\langle {n \\atop m} \\right\\rangle$".to_string(),
        "lah" => "$L(n,m)$".to_string(),
        "alpha" => "$\\alpha_{pm}(k)$".to_string(),
        "beta" => "$\\beta_{pm}(k)$".to_string(),
        "gamma" => "$\\gamma_{p;a}$".to_string(),
        _ => format!("${column}$"),
    }
}
