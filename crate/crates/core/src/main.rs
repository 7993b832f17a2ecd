fn main() {
    std::process::exit(hatelex::cli::main_with_args(std::env::args_os()));
}
