from DiophTools.ChosenNum.sequences.sequence import *
from DiophTools.ChosenNum.sequences.builders import *
from DiophTools.ChosenNum.sequences.blocks import *
