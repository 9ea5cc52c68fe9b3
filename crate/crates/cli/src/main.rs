fn main() {
    match lorentz_turns_cli::run_from_args(std::env::args_os()) {
        Ok(body) => println!("{body}"),
        Err(failure) => {
            println!("{}", failure.body);
            std::process::exit(failure.exit_code);
        }
    }
}
