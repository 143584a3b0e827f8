//! Reads a parameter file, validates it and prints it back.
//!
//! `cargo run --example config_roundtrip -- configs/reference.cfg`

use hybrid_polariton::{params_from_config, ModelParams};

fn main() {
    let Some(path) = std::env::args().nth(1) else {
        print!("{}", ModelParams::reference().to_config_string());
        return;
    };
    match params_from_config(&path) {
        Ok(params) => {
            let text = params.to_config_string();
            let again = ModelParams::from_config_str(&text).expect("written config parses");
            assert_eq!(again, params);
            print!("{text}");
            if !params.is_damped() {
                eprintln!("note: no damping; only poles and dynamics are available");
            }
        }
        Err(e) => {
            eprintln!("{path}: {e}");
            std::process::exit(1);
        }
    }
}
