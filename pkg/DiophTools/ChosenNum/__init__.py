from DiophTools.ChosenNum import arithmetic
from DiophTools.ChosenNum import primes
from DiophTools.ChosenNum import sequences
from DiophTools.ChosenNum import sievelab
from DiophTools.ChosenNum import hits
from DiophTools.ChosenNum import ergodic
from DiophTools.ChosenNum import IO
