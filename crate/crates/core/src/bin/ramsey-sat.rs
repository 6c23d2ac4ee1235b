fn main() { std::process::exit(ramsey_sat::cli::main_from_env()); }
