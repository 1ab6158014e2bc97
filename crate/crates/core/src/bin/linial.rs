fn main() {
    std::process::exit(linial::cli::main_with_args(std::env::args_os()));
}
