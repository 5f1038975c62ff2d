fn main() {
    std::process::exit(mackey::cli::main_with_args(std::env::args_os()));
}
