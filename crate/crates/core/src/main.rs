fn main() {
    std::process::exit(bigrees::cli::main_with_args(std::env::args_os()));
}
