fn main() {
    std::process::exit(mtbs_cli::main_with_args(std::env::args_os()));
}
