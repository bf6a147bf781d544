fn main() {
    std::process::exit(rowguard::cli::main_with_args(std::env::args_os()));
}
