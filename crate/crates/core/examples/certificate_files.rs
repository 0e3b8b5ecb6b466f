//! Writes a coloring as `.mrc`, reads it back, and renders it as DOT.

use multiramsey::dot::to_dot;
use multiramsey::mrc::{read_mrc, to_mrc_string, write_mrc};
use multiramsey::witness::witness_t10;

fn main() -> multiramsey::Result<()> {
    let coloring = witness_t10(2)?;
    let path = std::env::temp_dir().join(format!("multiramsey-{}.mrc", std::process::id()));
    write_mrc(&coloring, &path)?;
    let back = read_mrc(&path)?;
    assert_eq!(back, coloring);
    std::fs::remove_file(&path)?;

    println!(
        "{}",
        to_mrc_string(&coloring)
            .lines()
            .take(6)
            .collect::<Vec<_>>()
            .join("\n")
    );
    println!("...\n");
    print!("{}", to_dot(&back));
    Ok(())
}
