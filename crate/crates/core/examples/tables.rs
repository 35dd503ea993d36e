//! The four tables as structured rows, printed as text or JSON.
//!
//! ```text
//! cargo run --example tables -- json
//! ```

use nikulin::cli::{render_text, table, TableName};
use nikulin::Result;

fn main() -> Result<()> {
    let json = std::env::args().nth(1).as_deref() == Some("json");
    for name in [TableName::Picx, TableName::Modelsx, TableName::Nsy, TableName::Projy] {
        let doc = table(name, (1, 4), None)?;
        if json {
            println!("{}", serde_json::to_string(&doc).expect("rows serialize"));
        } else {
            print!("{}", render_text(&doc));
            let failed = doc.rows.iter().filter(|r| !r.passed()).count();
            println!("{failed} rows with failed checks\n");
        }
    }
    Ok(())
}
