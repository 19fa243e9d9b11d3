use std::env;
use std::path::PathBuf;

fn main() {
    let crate_dir = PathBuf::from(env::var("CARGO_MANIFEST_DIR").expect("cargo sets this"));
    let out_path = PathBuf::from(env::var("OUT_DIR").expect("cargo sets this")).join("drvkit.h");

    let config =
        cbindgen::Config::from_file(crate_dir.join("cbindgen.toml")).expect("cbindgen.toml parses");
    cbindgen::Builder::new()
        .with_crate(&crate_dir)
        .with_config(config)
        .generate()
        .expect("header generation succeeds")
        .write_to_file(&out_path);

    // Keep the committed copy in sync; a test compares the two.
    let committed = crate_dir.join("include").join("drvkit.h");
    if let Ok(generated) = std::fs::read(&out_path) {
        let _ = std::fs::create_dir_all(committed.parent().expect("include dir"));
        match std::fs::read(&committed) {
            Ok(existing) if existing == generated => {}
            _ => {
                let _ = std::fs::write(&committed, &generated);
            }
        }
    }
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");
}
