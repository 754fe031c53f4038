use clap::Parser;
use yuga_core::cli::{self, Cli};

fn main() {
    let args = Cli::parse();
    match cli::run(&args) {
        Ok(out) => print!("{out}"),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(1);
        }
    }
}
