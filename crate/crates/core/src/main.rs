fn main() {
    std::process::exit(partial_domination::cli::main_with_args(std::env::args_os()));
}
