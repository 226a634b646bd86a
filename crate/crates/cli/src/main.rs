use clap::Parser;
use mutclass_cli::{run, Cli, ExitCode};

fn main() {
    let code = match Cli::try_parse() {
        Ok(cli) => run(cli),
        Err(e) => {
            let _ = e.print();
            if e.use_stderr() {
                ExitCode::Usage
            } else {
                ExitCode::Ok
            }
        }
    };
    std::process::exit(code as i32);
}
