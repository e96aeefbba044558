use clap::Parser;
use toric_mirror::cli::{dispatch, CommandConfig};

fn main() {
    let config = match CommandConfig::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            std::process::exit(e.exit_code());
        }
    };
    let code = dispatch(&config, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code);
}
