fn main() {
    std::process::exit(tan_core::cli::main_with_args(std::env::args_os()));
}
