use std::process::ExitCode;

fn main() -> ExitCode {
    conjspaces::cli::main()
}
