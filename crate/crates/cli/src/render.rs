use clap::ValueEnum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

/// Right-aligned plain-text table.
pub fn table(headers: &[String], rows: &[Vec<String>]) -> String {
    let cols = headers.len().max(rows.iter().map(Vec::len).max().unwrap_or(0));
    let mut widths = vec![0; cols];
    for row in std::iter::once(headers).chain(rows.iter().map(Vec::as_slice)) {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let fmt_row = |row: &[String]| {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        cells.join("  ").trim_end().to_string()
    };
    let mut out = String::new();
    if !headers.is_empty() {
        out.push_str(&fmt_row(headers));
        out.push('\n');
    }
    for row in rows {
        out.push_str(&fmt_row(row));
        out.push('\n');
    }
    out
}

pub fn csv(headers: &[String], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    if !headers.is_empty() {
        out.push_str(&headers.join(","));
        out.push('\n');
    }
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn tabular(format: Format, headers: &[String], rows: &[Vec<String>]) -> String {
    match format {
        Format::Csv => csv(headers, rows),
        _ => table(headers, rows),
    }
}

pub fn json(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serializes");
    s.push('\n');
    s
}

/// `key: value` lines for table output, `key,value` for CSV.
pub fn pairs(format: Format, v: &serde_json::Value) -> String {
    let Some(obj) = v.as_object() else {
        return json(v);
    };
    let rows: Vec<Vec<String>> = obj
        .iter()
        .map(|(k, v)| {
            let v = match v {
                serde_json::Value::String(s) => s.clone(),
                serde_json::Value::Array(a) => a
                    .iter()
                    .map(|x| x.as_str().map(str::to_string).unwrap_or_else(|| x.to_string()))
                    .collect::<Vec<_>>()
                    .join(" "),
                other => other.to_string(),
            };
            vec![k.clone(), v]
        })
        .collect();
    match format {
        Format::Csv => csv(&["key".into(), "value".into()], &rows),
        _ => rows.iter().map(|r| format!("{}: {}\n", r[0], r[1])).collect(),
    }
}

pub fn float(x: f64) -> String {
    format!("{x:.12}")
}

pub fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}
