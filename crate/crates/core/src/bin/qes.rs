fn main() {
    std::process::exit(qes::cli::main_with_args(std::env::args_os()));
}
