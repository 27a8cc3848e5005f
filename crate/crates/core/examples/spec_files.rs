//! Load the sample TOML specifications and summarize each group.

use simconj::genfun::a_of_t;
use simconj::spec_file::GroupSpec;

fn main() -> simconj::Result<()> {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("specs");
    let mut paths: Vec<_> = std::fs::read_dir(&dir)
        .map_err(|e| simconj::Error::Io(e.to_string()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "toml"))
        .collect();
    paths.sort();
    for path in paths {
        let g = GroupSpec::load(&path)?.build()?;
        println!("{}: {} order {}  A = {}", path.file_name().unwrap().to_string_lossy(), g.label(), g.order(), a_of_t(&g));
    }
    Ok(())
}
