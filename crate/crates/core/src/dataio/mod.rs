//! Text formats: cyclotomic expressions, `.mtc` modular-data files, the
//! built-in catalog and report rendering.

mod catalog;
mod expr;
mod file;
mod report;

pub use catalog::{catalog, sqrt13, CATALOG_NAMES};
pub use expr::parse_expr;
pub use file::{parse_file, read_file, write_file_string, ModularDataFile, UnitSelector};
pub use report::{
    parse_spectrum, render_decomposition, render_indicators, render_spectrum, render_spectrum_table,
    render_validation, serialize_products, serialize_spectrum, Format,
};
